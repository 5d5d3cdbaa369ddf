#include "autocf/invseries.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "autocf/errors.hpp"

namespace autocf::invseries {

Depth add_depth(Depth a, Depth b) {
    if (a >= kInfinite || b >= kInfinite) {
        return kInfinite;
    }
    return std::min(a + b, kInfinite);
}

InvSeries InvSeries::zero(Depth precision) {
    InvSeries s;
    s.precision_ = std::min(precision, kInfinite);
    return s;
}

InvSeries InvSeries::one() {
    return monomial(Monomial{});
}

InvSeries InvSeries::monomial(const Monomial& m) {
    InvSeries s;
    s.terms_.push_back(m);
    return s;
}

InvSeries InvSeries::inverse_of(const Monomial& m) {
    return monomial(m.inverse());
}

InvSeries InvSeries::from_poly(const Gf2Poly& p) {
    // grlex-descending already means ascending depth
    InvSeries s;
    s.terms_ = p.terms();
    return s;
}

InvSeries InvSeries::from_terms(std::vector<Monomial> terms, Depth precision) {
    std::erase_if(terms, [precision](const Monomial& m) { return depth_of(m) >= precision; });
    gf2poly::canonicalize_terms(terms);
    InvSeries s;
    s.terms_ = std::move(terms);
    s.precision_ = std::min(precision, kInfinite);
    return s;
}

InvSeries InvSeries::truncated(Depth precision) const {
    if (precision >= precision_) {
        return *this;
    }
    InvSeries s;
    s.precision_ = precision;
    for (const auto& m : terms_) {
        if (depth_of(m) >= precision) {
            break;
        }
        s.terms_.push_back(m);
    }
    return s;
}

InvSeries& InvSeries::operator+=(const InvSeries& other) {
    const Depth p = std::min(precision_, other.precision_);
    terms_ = gf2poly::xor_terms(terms_, other.terms_);
    precision_ = kInfinite;
    *this = truncated(p);
    precision_ = p;
    return *this;
}

Depth depth_norm(const InvSeries& s) {
    return s.terms().empty() ? kInfinite : depth_of(s.terms().front());
}

InvSeries operator*(const InvSeries& lhs, const InvSeries& rhs) {
    // unknown terms of a factor sit at depth >= its precision, so that bounds its norm too
    const Depth p = std::min(add_depth(lhs.precision_, std::min(depth_norm(rhs), rhs.precision_)),
                             add_depth(rhs.precision_, std::min(depth_norm(lhs), lhs.precision_)));
    std::vector<Monomial> products;
    for (const auto& x : lhs.terms_) {
        const Depth dx = depth_of(x);
        for (const auto& y : rhs.terms_) {
            // rhs is sorted by ascending depth
            if (dx + depth_of(y) >= p) {
                break;
            }
            products.push_back(x * y);
        }
    }
    gf2poly::canonicalize_terms(products);
    InvSeries s;
    s.terms_ = std::move(products);
    s.precision_ = p;
    return s;
}

InvSeries InvSeries::operator*(const Monomial& m) const {
    InvSeries s;
    s.precision_ = add_depth(precision_, depth_of(m));
    s.terms_.reserve(terms_.size());
    for (const auto& x : terms_) {
        s.terms_.push_back(x * m);
    }
    return s;
}

InvSeries InvSeries::pow2k(int k) const {
    if (k < 0) {
        throw std::invalid_argument("pow2k requires k >= 0");
    }
    InvSeries s;
    s.terms_.reserve(terms_.size());
    for (const auto& m : terms_) {
        s.terms_.push_back(m.frobenius(k));
    }
    if (precision_ >= kInfinite) {
        s.precision_ = kInfinite;
    } else if (precision_ >= 0) {
        s.precision_ = precision_ >= (kInfinite >> k) ? kInfinite : precision_ << k;
    } else {
        s.precision_ = precision_ * (Depth{1} << k);
    }
    return s;
}

InvSeries InvSeries::pow(unsigned exponent) const {
    InvSeries result = one();
    InvSeries base = *this;
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

InvSeries inverse(const InvSeries& s, Depth cap) {
    if (s.terms().empty()) {
        throw NotInvertibleError("series is zero below its precision");
    }
    const Monomial& lead = s.terms().front();
    const Depth lead_depth = depth_of(lead);
    if (s.terms().size() > 1 && depth_of(s.terms()[1]) == lead_depth) {
        throw NotInvertibleError("minimal depth " + std::to_string(lead_depth) +
                                 " is attained by more than one term");
    }
    const Monomial lead_inv = lead.inverse();
    const Depth out_precision = std::min(add_depth(s.precision(), -2 * lead_depth), cap);

    // r = s/m - 1 has every term at depth >= 1
    InvSeries r = s * lead_inv;
    r += InvSeries::one();
    if (r.is_zero() && r.is_exact()) {
        return InvSeries::monomial(lead_inv).truncated(out_precision);
    }
    if (out_precision >= kInfinite) {
        throw std::invalid_argument("inverse of an exact non-monomial series needs a precision cap");
    }
    const Depth work = out_precision + lead_depth;

    // 1/(1+r) = prod_k (1 + r^(2^k)) in characteristic 2
    InvSeries acc = InvSeries::one().truncated(work);
    InvSeries q = r.truncated(work);
    while (!q.is_zero() && depth_norm(q) < work) {
        InvSeries factor = q;
        factor += InvSeries::one();
        acc = (acc * factor).truncated(work);
        q = q.square().truncated(work);
    }
    acc = InvSeries::from_terms(acc.terms(), work);
    return (acc * lead_inv).truncated(out_precision);
}

InvSeries eval_relation_inv(const cfalg::Relation& rel, const InvSeries& s) {
    InvSeries total;
    InvSeries power = InvSeries::one();
    int power_exp = 0;
    for (const auto& [j, c] : rel.coefficients()) {
        while (power_exp < j) {
            // square when it gets us exactly there or halfway, otherwise multiply
            if (power_exp > 0 && 2 * power_exp <= j) {
                power = power.square();
                power_exp *= 2;
            } else {
                power = power * s;
                ++power_exp;
            }
        }
        total += InvSeries::from_poly(c) * power;
    }
    return total;
}

std::string to_string(const InvSeries& s) {
    std::string out;
    for (const auto& m : s.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += gf2poly::to_string(m);
    }
    if (!s.is_exact()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "O(depth " + std::to_string(s.precision()) + ")";
    }
    return out.empty() ? "0" : out;
}

InvSeries parse_invseries(std::string_view text) {
    Depth precision = kInfinite;
    const auto o = text.find("O(");
    if (o != std::string_view::npos) {
        std::size_t i = o + 2;
        const std::string_view key = "depth";
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        if (text.substr(i, key.size()) != key) {
            throw ParseError("expected 'depth'", i);
        }
        i += key.size();
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        bool negative = false;
        if (i < text.size() && text[i] == '-') {
            negative = true;
            ++i;
        }
        const std::size_t digits = i;
        Depth value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + (text[i] - '0');
            ++i;
        }
        if (i == digits || i >= text.size() || text[i] != ')') {
            throw ParseError("malformed precision term", i);
        }
        precision = negative ? -value : value;
        // strip "+ O(...)" and everything after it
        std::size_t cut = o;
        while (cut > 0 && std::isspace(static_cast<unsigned char>(text[cut - 1]))) {
            --cut;
        }
        if (cut > 0 && text[cut - 1] == '+') {
            --cut;
        } else if (cut > 0) {
            throw ParseError("expected '+' before precision term", cut);
        }
        text = text.substr(0, cut);
    }
    bool blank = true;
    for (char c : text) {
        blank = blank && std::isspace(static_cast<unsigned char>(c));
    }
    if (blank) {
        return InvSeries::zero(precision);
    }
    return InvSeries::from_terms(gf2poly::parse_terms(text, true), precision);
}

}  // namespace autocf::invseries
