#pragma once

// Truncated elements of F2((1/a_0, ..., 1/a_k)).
//
// A term prod a_i^{-n_i} is stored as a Monomial with exponents -n_i, so its depth is
// sum n_i = -degree(). A series carries a precision p: every term of depth < p is
// known and stored, nothing at depth >= p is. Polynomial parts (negative depth) are
// allowed and are finite by construction.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autocf/gf2poly.hpp"
#include "autocf/relation.hpp"

namespace autocf::invseries {

using gf2poly::Gf2Poly;
using gf2poly::Monomial;

using Depth = std::int64_t;

// Precision of exact values and depth norm of zero.
inline constexpr Depth kInfinite = Depth{1} << 50;

// Saturating at kInfinite in both directions of infinity.
Depth add_depth(Depth a, Depth b);

inline Depth depth_of(const Monomial& m) {
    return -static_cast<Depth>(m.degree());
}

class InvSeries {
public:
    // Exact zero.
    InvSeries() = default;

    static InvSeries zero(Depth precision);
    static InvSeries one();
    // Exact single term.
    static InvSeries monomial(const Monomial& m);
    // The term prod a_i^{-n_i} for a monomial listing the n_i.
    static InvSeries inverse_of(const Monomial& m);
    static InvSeries from_poly(const Gf2Poly& p);
    // Canonicalizes and drops terms at depth >= precision.
    static InvSeries from_terms(std::vector<Monomial> terms, Depth precision);

    // Ascending depth (ties in grlex-descending order of the exponent vector).
    const std::vector<Monomial>& terms() const { return terms_; }
    Depth precision() const { return precision_; }
    bool is_exact() const { return precision_ >= kInfinite; }
    bool is_zero() const { return terms_.empty(); }

    InvSeries truncated(Depth precision) const;

    InvSeries& operator+=(const InvSeries& other);
    friend InvSeries operator+(InvSeries lhs, const InvSeries& rhs) { return lhs += rhs; }
    // Precision min(p_x + d_y, p_y + d_x), d the depth norm of the other factor.
    friend InvSeries operator*(const InvSeries& lhs, const InvSeries& rhs);
    InvSeries operator*(const Monomial& m) const;

    // Frobenius: x^(2^k), precision scaled by 2^k.
    InvSeries pow2k(int k) const;
    InvSeries square() const { return pow2k(1); }
    InvSeries pow(unsigned exponent) const;

    friend bool operator==(const InvSeries&, const InvSeries&) = default;

private:
    std::vector<Monomial> terms_;
    Depth precision_ = kInfinite;
};

// Minimal term depth m (norm 2^-m); kInfinite when no terms survive.
Depth depth_norm(const InvSeries& s);

// 1/s for s with a unique minimal-depth term m: s = m (1 + r), 1/s = m^-1 sum r^i.
// Output precision p - 2 depth(m), lowered to `cap`. An exact series that is not a
// single term needs a finite cap. Throws NotInvertibleError otherwise.
InvSeries inverse(const InvSeries& s, Depth cap = kInfinite);

// Residual sum_j c_j s^j with propagated precision.
InvSeries eval_relation_inv(const cfalg::Relation& rel, const InvSeries& s);

// "a^-1 + a^-2*b^-1 + O(depth 64)"; exact series omit the O-term, zero prints "0".
std::string to_string(const InvSeries& s);
InvSeries parse_invseries(std::string_view text);

}  // namespace autocf::invseries
