#include "autocf/laurent.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "autocf/errors.hpp"

namespace autocf::cfalg {

using invseries::add_depth;
using invseries::kInfinite;

namespace {

std::int64_t lowest_bit(const UniPoly& p) {
    const auto& w = p.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != 0) {
            return static_cast<std::int64_t>(i * 64) + std::countr_zero(w[i]);
        }
    }
    return -1;
}

// Drops the lowest n bits.
UniPoly shift_down(const UniPoly& p, std::int64_t n) {
    if (n <= 0) {
        return p;
    }
    const auto& w = p.words();
    const auto word_shift = static_cast<std::size_t>(n / 64);
    const int bit_shift = static_cast<int>(n % 64);
    if (word_shift >= w.size()) {
        return {};
    }
    std::vector<std::uint64_t> out(w.size() - word_shift, 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = w[i + word_shift] >> bit_shift;
        if (bit_shift != 0 && i + word_shift + 1 < w.size()) {
            out[i] |= w[i + word_shift + 1] << (64 - bit_shift);
        }
    }
    return UniPoly::from_words(std::move(out));
}

// Keeps bits below n.
UniPoly keep_below(const UniPoly& p, std::int64_t n) {
    if (n <= 0) {
        return {};
    }
    if (p.degree() < n) {
        return p;
    }
    std::vector<std::uint64_t> out(p.words().begin(),
                                   p.words().begin() + static_cast<std::ptrdiff_t>((n + 63) / 64));
    if (n % 64 != 0) {
        out.back() &= (std::uint64_t{1} << (n % 64)) - 1;
    }
    return UniPoly::from_words(std::move(out));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

}  // namespace

void LaurentSeries::normalize() {
    precision_ = std::min(precision_, kInfinite);
    const std::int64_t b = lowest_bit(bits_);
    if (b < 0) {
        low_ = 0;
        bits_ = {};
        return;
    }
    bits_ = shift_down(bits_, b);
    low_ += b;
    if (!is_exact()) {
        bits_ = keep_below(bits_, precision_ - low_);
        if (bits_.is_zero()) {
            low_ = 0;
        }
    }
}

LaurentSeries LaurentSeries::zero(std::int64_t precision) {
    LaurentSeries s;
    s.precision_ = std::min(precision, kInfinite);
    return s;
}

LaurentSeries LaurentSeries::from_unipoly(const UniPoly& p) {
    // t^e is (1/t)^(-e): bit i of the result is t^(deg - i)
    LaurentSeries s;
    if (p.is_zero()) {
        return s;
    }
    const int deg = p.degree();
    UniPoly reversed;
    for (int e = 0; e <= deg; ++e) {
        if (p.coeff(e)) {
            reversed.set_coeff(deg - e, true);
        }
    }
    s.low_ = -deg;
    s.bits_ = std::move(reversed);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_bits(std::int64_t low, const UniPoly& bits, std::int64_t precision) {
    LaurentSeries s;
    s.low_ = low;
    s.bits_ = bits;
    s.precision_ = precision;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_powers(const std::vector<std::int64_t>& ks, std::int64_t precision) {
    if (ks.empty()) {
        return zero(precision);
    }
    const std::int64_t low = *std::min_element(ks.begin(), ks.end());
    UniPoly bits;
    for (auto k : ks) {
        if (k < precision) {
            bits.set_coeff(static_cast<int>(k - low), !bits.coeff(static_cast<int>(k - low)));
        }
    }
    return from_bits(low, bits, precision);
}

std::int64_t LaurentSeries::valuation() const {
    return is_zero() ? kInfinite : low_;
}

bool LaurentSeries::coeff(std::int64_t k) const {
    if (k < low_ || is_zero()) {
        return false;
    }
    const std::int64_t i = k - low_;
    return i <= bits_.degree() && bits_.coeff(static_cast<int>(i));
}

std::vector<std::int64_t> LaurentSeries::support() const {
    std::vector<std::int64_t> out;
    for (int i = 0; i <= bits_.degree(); ++i) {
        if (bits_.coeff(i)) {
            out.push_back(low_ + i);
        }
    }
    return out;
}

UniPoly LaurentSeries::polynomial_part() const {
    if (precision_ < 1) {
        throw std::domain_error("polynomial part is not determined below precision 1");
    }
    UniPoly out;
    for (auto k : support()) {
        if (k > 0) {
            break;
        }
        out.set_coeff(static_cast<int>(-k), true);
    }
    return out;
}

LaurentSeries LaurentSeries::fractional_part() const {
    LaurentSeries s = *this;
    if (!s.is_zero() && s.low_ < 1) {
        s.bits_ = shift_down(s.bits_, 1 - s.low_);
        s.low_ = 1;
        s.normalize();
    }
    return s;
}

LaurentSeries LaurentSeries::truncated(std::int64_t precision) const {
    if (precision >= precision_) {
        return *this;
    }
    LaurentSeries s = *this;
    s.precision_ = precision;
    s.normalize();
    return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other) {
    const std::int64_t p = std::min(precision_, other.precision_);
    if (other.is_zero()) {
        precision_ = p;
        normalize();
        return *this;
    }
    if (is_zero()) {
        *this = other;
        precision_ = p;
        normalize();
        return *this;
    }
    const std::int64_t low = std::min(low_, other.low_);
    UniPoly sum = bits_.shifted(static_cast<int>(low_ - low));
    sum += other.bits_.shifted(static_cast<int>(other.low_ - low));
    low_ = low;
    bits_ = std::move(sum);
    precision_ = p;
    normalize();
    return *this;
}

LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs) {
    LaurentSeries s;
    s.precision_ = std::min(add_depth(lhs.precision_, std::min(rhs.valuation(), rhs.precision_)),
                            add_depth(rhs.precision_, std::min(lhs.valuation(), lhs.precision_)));
    if (!lhs.is_zero() && !rhs.is_zero()) {
        // only bits below the output precision matter
        const std::int64_t keep = s.precision_ - lhs.low_ - rhs.low_;
        if (s.is_exact()) {
            s.bits_ = lhs.bits_ * rhs.bits_;
        } else {
            s.bits_ = keep_below(keep_below(lhs.bits_, keep) * keep_below(rhs.bits_, keep), keep);
        }
        s.low_ = lhs.low_ + rhs.low_;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::square() const {
    LaurentSeries s;
    s.low_ = 2 * low_;
    s.bits_ = bits_.square();
    if (is_exact() || precision_ >= kInfinite / 2) {
        s.precision_ = kInfinite;
    } else {
        s.precision_ = 2 * precision_;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::derivative() const {
    // d/dt t^-k = k t^-(k+1): odd k survive and move to k + 1
    std::vector<std::int64_t> ks;
    for (auto k : support()) {
        if (k % 2 != 0) {
            ks.push_back(k + 1);
        }
    }
    return from_powers(ks, add_depth(precision_, 1));
}

LaurentSeries LaurentSeries::contracted(int factor) const {
    if (factor < 1) {
        throw std::invalid_argument("contraction factor must be >= 1");
    }
    std::vector<std::int64_t> ks;
    for (auto k : support()) {
        if (k % factor != 0) {
            throw std::domain_error("series has a term t^" + std::to_string(-k) +
                                    " not divisible by the contraction factor");
        }
        ks.push_back(k / factor);
    }
    const std::int64_t p = is_exact() ? kInfinite : floor_div(precision_ - 1, factor) + 1;
    return from_powers(ks, p);
}

LaurentSeries inverse(const LaurentSeries& s, std::int64_t cap) {
    if (s.is_zero()) {
        throw NotInvertibleError("Laurent series is zero below its precision");
    }
    const std::int64_t v = s.valuation();
    const std::int64_t out_precision = std::min(add_depth(s.precision(), -2 * v), cap);
    const auto bits = s.support();
    if (s.is_exact() && bits.size() == 1) {
        return LaurentSeries::from_powers({-v}, out_precision);
    }
    if (out_precision >= kInfinite) {
        throw std::invalid_argument("inverse of an exact non-monomial series needs a precision cap");
    }
    // s = x^v S(x) with x = 1/t and S(0) = 1; 1/S mod x^n by w <- S w^2 (char 2 Newton)
    const std::int64_t n = out_precision + v;
    UniPoly big_s;
    for (auto k : bits) {
        if (k - v >= n) {
            break;
        }
        big_s.set_coeff(static_cast<int>(k - v), true);
    }
    UniPoly w = UniPoly::one();
    for (std::int64_t known = 1; known < n;) {
        known = std::min(2 * known, n);
        w = keep_below(keep_below(big_s, known) * w.square(), known);
    }
    return LaurentSeries::from_bits(-v, w, out_precision);
}

LaurentSeries specialize_uniform(const invseries::InvSeries& s, int weight) {
    if (weight < 1) {
        throw std::invalid_argument("specialization weight must be >= 1");
    }
    std::vector<std::int64_t> ks;
    for (const auto& m : s.terms()) {
        ks.push_back(weight * invseries::depth_of(m));
    }
    const std::int64_t p = s.is_exact() ? kInfinite : s.precision() * weight;
    return LaurentSeries::from_powers(ks, p);
}

LaurentSeries cf_value(const std::vector<UniPoly>& head, const std::vector<UniPoly>& tail,
                       std::int64_t precision) {
    if (head.empty() && tail.empty()) {
        throw std::invalid_argument("continued fraction needs at least one quotient");
    }
    auto quotient = [&](std::size_t i) -> const UniPoly& {
        return i < head.size() ? head[i] : tail[(i - head.size()) % tail.size()];
    };
    for (std::size_t i = 1; i < head.size() + tail.size(); ++i) {
        if (quotient(i).is_constant()) {
            throw std::invalid_argument("partial quotients after the first must be non-constant");
        }
    }
    UniPoly p_prev = UniPoly::one();
    UniPoly q_prev;
    UniPoly p = quotient(0);
    UniPoly q = UniPoly::one();
    for (std::size_t i = 1;; ++i) {
        if (tail.empty() && i >= head.size()) {
            break;
        }
        // the error after Q_n is below depth deg Q_n + deg Q_{n+1} > 2 deg Q_n
        if (!tail.empty() && i >= head.size() && 2 * static_cast<std::int64_t>(q.degree()) >= precision) {
            break;
        }
        const UniPoly& u = quotient(i);
        UniPoly p_next = u * p + p_prev;
        UniPoly q_next = u * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    const LaurentSeries num = LaurentSeries::from_unipoly(p);
    const std::int64_t cap = precision + std::max(0, p.degree());
    return (num * inverse(LaurentSeries::from_unipoly(q), cap)).truncated(precision);
}

std::string to_string(CfStop stop) {
    switch (stop) {
        case CfStop::Count:
            return "count";
        case CfStop::ZeroRemainder:
            return "zero-remainder";
        case CfStop::PrecisionExhausted:
            return "precision-exhausted";
    }
    return "?";
}

CfExpansion cf_expand(const LaurentSeries& s, std::size_t count) {
    if (s.is_zero()) {
        throw std::invalid_argument("cannot expand a series that is zero below its precision");
    }
    CfExpansion out;
    LaurentSeries x = s;
    while (out.quotients.size() < count) {
        if (x.precision() < 1) {
            out.stop = CfStop::PrecisionExhausted;
            return out;
        }
        out.quotients.push_back(x.polynomial_part());
        if (out.quotients.size() == count) {
            break;
        }
        const LaurentSeries r = x.fractional_part();
        if (r.is_zero()) {
            out.stop = r.is_exact() ? CfStop::ZeroRemainder : CfStop::PrecisionExhausted;
            return out;
        }
        x = inverse(r);
    }
    out.stop = CfStop::Count;
    return out;
}

std::string to_string(const LaurentSeries& s, char var) {
    std::string out;
    for (auto k : s.support()) {
        if (!out.empty()) {
            out += " + ";
        }
        if (k == 0) {
            out += "1";
        } else {
            out += var;
            if (k != -1) {
                out += "^" + std::to_string(-k);
            }
        }
    }
    if (!s.is_exact()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(" + std::string(1, var) + "^" + std::to_string(-s.precision()) + ")";
    }
    return out.empty() ? "0" : out;
}

}  // namespace autocf::cfalg
