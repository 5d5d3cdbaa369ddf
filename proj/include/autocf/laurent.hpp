#pragma once

// Truncated Laurent series in 1/t over F2 and continued-fraction expansion in F2((1/t)).
//
// Coefficients are indexed by k, the power of 1/t: k <= 0 is the polynomial part. A series
// with precision p knows every coefficient with k < p.

#include <cstdint>
#include <string>
#include <vector>

#include "autocf/gf2poly.hpp"
#include "autocf/invseries.hpp"

namespace autocf::cfalg {

using gf2poly::UniPoly;

class LaurentSeries {
public:
    // Exact zero.
    LaurentSeries() = default;

    static LaurentSeries zero(std::int64_t precision);
    static LaurentSeries one() { return from_unipoly(UniPoly::one()); }
    // Exact polynomial in t.
    static LaurentSeries from_unipoly(const UniPoly& p);
    // Coefficient of (1/t)^(low + i) is bit i of `bits`.
    static LaurentSeries from_bits(std::int64_t low, const UniPoly& bits, std::int64_t precision);
    // Sum of (1/t)^k over the given k (repeats cancel), known below precision.
    static LaurentSeries from_powers(const std::vector<std::int64_t>& ks, std::int64_t precision);

    // Smallest k with a nonzero coefficient; kInfinite for zero.
    std::int64_t valuation() const;
    std::int64_t precision() const { return precision_; }
    bool is_exact() const { return precision_ >= invseries::kInfinite; }
    bool is_zero() const { return bits_.is_zero(); }
    bool coeff(std::int64_t k) const;
    // Ascending k.
    std::vector<std::int64_t> support() const;

    // Terms with k <= 0, as a polynomial in t. Needs precision >= 1.
    UniPoly polynomial_part() const;
    // Terms with k >= 1.
    LaurentSeries fractional_part() const;
    LaurentSeries truncated(std::int64_t precision) const;

    LaurentSeries& operator+=(const LaurentSeries& other);
    friend LaurentSeries operator+(LaurentSeries lhs, const LaurentSeries& rhs) { return lhs += rhs; }
    // Precision min(p_x + v_y, p_y + v_x).
    friend LaurentSeries operator*(const LaurentSeries& lhs, const LaurentSeries& rhs);
    LaurentSeries square() const;
    // d/dt; precision grows by one.
    LaurentSeries derivative() const;
    // Replaces t^K by t; every occurring k must be a multiple of K.
    LaurentSeries contracted(int factor) const;

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    void normalize();

    std::int64_t low_ = 0;
    UniPoly bits_;
    std::int64_t precision_ = invseries::kInfinite;
};

// 1/s; output precision p - 2v, lowered to `cap`. Exact non-monomial input needs a cap.
LaurentSeries inverse(const LaurentSeries& s, std::int64_t cap = invseries::kInfinite);

// Maps every letter to t^weight. A term of depth n lands on (1/t)^(weight n).
LaurentSeries specialize_uniform(const invseries::InvSeries& s, int weight = 1);

// Value of [q_0; q_1, q_2, ...] as a Laurent series known below `precision`. The tail is
// repeated forever when nonempty; all quotients after q_0 must be non-constant.
LaurentSeries cf_value(const std::vector<UniPoly>& head, const std::vector<UniPoly>& tail,
                       std::int64_t precision);

enum class CfStop {
    Count,               // produced the requested number of quotients
    ZeroRemainder,       // exact remainder zero: the value is rational
    PrecisionExhausted,  // the next quotient is not determined by the known digits
};

struct CfExpansion {
    std::vector<UniPoly> quotients;
    CfStop stop = CfStop::Count;
};

std::string to_string(CfStop stop);

// Standard expansion: split off the polynomial part, invert the remainder, repeat.
CfExpansion cf_expand(const LaurentSeries& s, std::size_t count);

// "t^2 + 1 + t^-3 + O(t^-64)"; exact series omit the O-term.
std::string to_string(const LaurentSeries& s, char var = 't');

}  // namespace autocf::cfalg
