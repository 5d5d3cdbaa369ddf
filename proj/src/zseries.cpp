#include "autocf/zseries.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "autocf/errors.hpp"

namespace autocf::zseries {

using gf2poly::Monomial;
using gf2poly::kVarZ;

ZSeries::ZSeries(std::size_t precision) : coeffs_(precision) {}

ZSeries ZSeries::from_coeffs(std::vector<Gf2Poly> coeffs) {
    for (const auto& c : coeffs) {
        if (c.degree_in(kVarZ) > 0) {
            throw std::invalid_argument("series coefficients must not contain z");
        }
    }
    ZSeries s;
    s.coeffs_ = std::move(coeffs);
    return s;
}

ZSeries ZSeries::from_poly(const Gf2Poly& p, std::size_t precision) {
    ZSeries s(precision);
    for (const auto& [k, c] : split_z(p)) {
        if (static_cast<std::size_t>(k) < precision) {
            s.coeffs_[static_cast<std::size_t>(k)] = c;
        }
    }
    return s;
}

ZSeries ZSeries::indicator(const std::vector<std::uint64_t>& exponents, std::size_t precision) {
    ZSeries s(precision);
    for (auto k : exponents) {
        if (k < precision) {
            s.coeffs_[k] += Gf2Poly::one();
        }
    }
    return s;
}

void ZSeries::set_coeff(std::size_t j, Gf2Poly c) {
    if (c.degree_in(kVarZ) > 0) {
        throw std::invalid_argument("series coefficients must not contain z");
    }
    coeffs_.at(j) = std::move(c);
}

bool ZSeries::is_zero() const {
    return order() == precision();
}

std::size_t ZSeries::order() const {
    std::size_t j = 0;
    while (j < coeffs_.size() && coeffs_[j].is_zero()) {
        ++j;
    }
    return j;
}

ZSeries ZSeries::truncated(std::size_t precision) const {
    ZSeries s = *this;
    if (precision < s.coeffs_.size()) {
        s.coeffs_.resize(precision);
    }
    return s;
}

ZSeries& ZSeries::operator+=(const ZSeries& other) {
    if (other.precision() < precision()) {
        coeffs_.resize(other.precision());
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        coeffs_[j] += other.coeffs_[j];
    }
    return *this;
}

ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs) {
    const std::size_t p = std::min(lhs.precision(), rhs.precision());
    ZSeries out(p);
    for (std::size_t i = 0; i < p; ++i) {
        if (lhs.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j < p; ++j) {
            if (!rhs.coeffs_[j].is_zero()) {
                out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
            }
        }
    }
    return out;
}

ZSeries ZSeries::operator*(const Gf2Poly& c) const {
    if (c.degree_in(kVarZ) > 0) {
        throw std::invalid_argument("use from_poly for factors containing z");
    }
    ZSeries out(precision());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (!coeffs_[j].is_zero()) {
            out.coeffs_[j] = coeffs_[j] * c;
        }
    }
    return out;
}

ZSeries ZSeries::shifted(std::size_t k) const {
    ZSeries out(precision());
    for (std::size_t j = 0; j + k < coeffs_.size(); ++j) {
        out.coeffs_[j + k] = coeffs_[j];
    }
    return out;
}

ZSeries ZSeries::pow2k(int k) const {
    if (k < 0) {
        throw std::invalid_argument("pow2k requires k >= 0");
    }
    // Frobenius: s^(2^k) is known below P 2^k. Capped so repeated squaring stays small.
    constexpr std::size_t kCap = std::size_t{1} << 20;
    const std::size_t p = precision();
    std::size_t scaled = std::max(p, kCap);
    if (k < 40 && p <= (scaled >> k)) {
        scaled = p << k;
    }
    ZSeries out(p == 0 ? 0 : scaled);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (j > 0 && (k >= 40 || j > (out.coeffs_.size() - 1) >> k)) {
            break;
        }
        out.coeffs_[j << (k >= 40 ? 0 : k)] = coeffs_[j].pow2k(k);
    }
    return out;
}

ZSeries ZSeries::pow(unsigned exponent) const {
    ZSeries result = from_poly(Gf2Poly::one(), precision());
    ZSeries base = *this;
    while (exponent != 0) {
        if (exponent & 1u) {
            result = result * base;
        }
        exponent >>= 1;
        if (exponent != 0) {
            base = base.square();
        }
    }
    return result;
}

std::map<int, Gf2Poly> split_z(const Gf2Poly& p) {
    std::map<int, std::vector<Monomial>> buckets;
    for (auto m : p.terms()) {
        const int k = m.exponent(kVarZ);
        m.set_exponent(kVarZ, 0);
        buckets[k].push_back(m);
    }
    std::map<int, Gf2Poly> out;
    for (auto& [k, terms] : buckets) {
        out[k] = Gf2Poly::from_terms(std::move(terms));
    }
    return out;
}

Gf2Poly join_z(const std::map<int, Gf2Poly>& parts) {
    std::vector<Monomial> terms;
    for (const auto& [k, c] : parts) {
        const Monomial zk = Monomial::of(kVarZ, k);
        for (const auto& m : c.terms()) {
            terms.push_back(m * zk);
        }
    }
    return Gf2Poly::from_terms(std::move(terms));
}

namespace {

Gf2Poly letter_poly(seqcore::Letter c) {
    return Gf2Poly::variable(gf2poly::var_of(c.name));
}

std::size_t pow2_or_cap(std::size_t e, std::size_t cap) {
    return e >= 63 ? cap : std::min<std::size_t>(std::size_t{1} << e, cap);
}

}  // namespace

ZSeries compute_F(const EpsSpec& spec, std::size_t precision) {
    ZSeries s(precision);
    for (std::size_t j = 0; j < precision; ++j) {
        s.set_coeff(j, letter_poly(seqcore::letter_at(spec, j)));
    }
    return s;
}

ZSeries geometric(std::size_t step, std::size_t precision) {
    if (step == 0) {
        throw std::invalid_argument("geometric series needs a positive step");
    }
    ZSeries s(precision);
    for (std::size_t j = 0; j < precision; j += step) {
        s.set_coeff(j, Gf2Poly::one());
    }
    return s;
}

ZSeries compute_R(const EpsSpec& spec, std::size_t precision) {
    const std::size_t l = spec.preperiod_length();
    const std::size_t period = pow2_or_cap(l, precision + 1);
    ZSeries numerator(precision);
    for (std::size_t k = 0; k + 2 <= period && k < precision; ++k) {
        numerator.set_coeff(k, letter_poly(seqcore::letter_at(spec, k)));
    }
    if (period > precision) {
        return numerator;
    }
    return numerator * geometric(period, precision);
}

ZSeries compute_Fn(const EpsSpec& spec, std::size_t n, std::size_t precision) {
    const auto set = seqcore::positions_predicted(seqcore::relabel_distinct(spec), n, precision);
    return ZSeries::indicator(set.indices, precision);
}

ZSeries compute_F0(const EpsSpec& spec, std::size_t precision) {
    return compute_Fn(spec, 0, precision);
}

ZSeries compute_f(std::size_t period_length, std::size_t precision) {
    return ZSeries::indicator(seqcore::slot_positions(0, period_length, 0, precision).indices,
                              precision);
}

ZSeries cartier_z(const ZSeries& s, int r) {
    if (r != 0 && r != 1) {
        throw std::invalid_argument("Cartier operator index must be 0 or 1");
    }
    // floor(P/2) for both r, even though r = 0 could keep one more coefficient when P is odd
    const std::size_t p = s.precision() / 2;
    ZSeries out(p);
    for (std::size_t j = 0; j < p; ++j) {
        out.set_coeff(j, s.coeff(2 * j + static_cast<std::size_t>(r)));
    }
    return out;
}

ZSeries eval_relation_z(const cfalg::Relation& rel, const ZSeries& s) {
    ZSeries total(s.precision());
    ZSeries power = ZSeries::from_poly(Gf2Poly::one(), s.precision());
    int power_exp = 0;
    for (const auto& [j, c] : rel.coefficients()) {
        while (power_exp < j) {
            if (power_exp > 0 && 2 * power_exp <= j) {
                power = power.square();
                power_exp *= 2;
            } else {
                power = power * s;
                ++power_exp;
            }
        }
        for (const auto& [k, ck] : split_z(c)) {
            total += (power * ck).shifted(static_cast<std::size_t>(k));
        }
    }
    return total;
}

std::string to_string(const ZSeries& s) {
    std::string out;
    for (std::size_t j = 0; j < s.precision(); ++j) {
        const Monomial zj = Monomial::of(kVarZ, static_cast<int>(j));
        for (const auto& m : s.coeff(j).terms()) {
            if (!out.empty()) {
                out += " + ";
            }
            out += gf2poly::to_string(m * zj);
        }
    }
    if (!out.empty()) {
        out += " + ";
    }
    out += "O(z^" + std::to_string(s.precision()) + ")";
    return out;
}

ZSeries parse_zseries(std::string_view text) {
    const auto o = text.find("O(");
    if (o == std::string_view::npos) {
        throw ParseError("expected precision term 'O(z^P)'", text.size());
    }
    std::size_t i = o + 2;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_space();
    if (i >= text.size() || text[i] != 'z') {
        throw ParseError("expected 'z'", i);
    }
    ++i;
    skip_space();
    std::size_t precision = 1;
    if (i < text.size() && text[i] == '^') {
        ++i;
        skip_space();
        const std::size_t digits = i;
        precision = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            precision = precision * 10 + static_cast<std::size_t>(text[i] - '0');
            ++i;
        }
        if (i == digits) {
            throw ParseError("expected precision exponent", i);
        }
        skip_space();
    }
    if (i >= text.size() || text[i] != ')') {
        throw ParseError("expected ')'", i);
    }
    ++i;
    skip_space();
    if (i != text.size()) {
        throw ParseError("trailing characters after precision term", i);
    }
    std::size_t cut = o;
    while (cut > 0 && std::isspace(static_cast<unsigned char>(text[cut - 1]))) {
        --cut;
    }
    if (cut == 0) {
        return ZSeries(precision);
    }
    if (text[cut - 1] != '+') {
        throw ParseError("expected '+' before precision term", cut);
    }
    return ZSeries::from_poly(gf2poly::parse_poly(text.substr(0, cut - 1)), precision);
}

}  // namespace autocf::zseries
