#pragma once

// Convergents over F2[t] with partial quotients in {a, b, a+b}, the invariant
// F_n = ab + g_n^2, the Riccati residual and the Baum-Sweet differential test.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "autocf/gf2poly.hpp"
#include "autocf/laurent.hpp"

namespace autocf::riccati {

using gf2poly::UniPoly;

class QuotientSeq {
public:
    enum class Tag { A, B, AB };

    // a and b must be non-constant and distinct.
    QuotientSeq(std::vector<Tag> pattern, UniPoly a, UniPoly b);
    // Pattern over {a, b, c}, c standing for a + b.
    static QuotientSeq parse(std::string_view pattern, UniPoly a, UniPoly b);

    const std::vector<Tag>& pattern() const { return pattern_; }
    const UniPoly& a() const { return a_; }
    const UniPoly& b() const { return b_; }
    std::size_t size() const { return pattern_.size(); }
    // u_i.
    UniPoly quotient(std::size_t i) const;

private:
    std::vector<Tag> pattern_;
    UniPoly a_;
    UniPoly b_;
};

// (P_n, Q_n) with (P_{-1}, Q_{-1}) = (1, 0), (P_0, Q_0) = (u_0, 1). Requires -1 <= n < size.
std::pair<UniPoly, UniPoly> convergents_uni(const QuotientSeq& q, int n);

struct RiccatiWitness {
    int n = -1;
    UniPoly f;  // ab(a+b) P_n Q_n + ab (P_n^2 + Q_n^2)
    UniPoly g;  // f = ab + g^2
    // 1/t-valuation of the residual (a'b + ab') / Q_n^2; kInfinite when (ab)' = 0.
    std::int64_t residual_valuation = 0;
};

// Throws InvariantViolation if F_n + ab is not a square.
RiccatiWitness fn_witness(const QuotientSeq& q, int n);

struct RiccatiResidual {
    // The residual (ab(a+b) f)' + (ab)'(1 + f^2) at f = P_n / Q_n, as numerator / Q_n^2,
    // computed with the quotient rule.
    UniPoly numerator;
    UniPoly denominator;
    // numerator == a'b + ab'.
    bool matches_closed_form = false;
    std::int64_t valuation = 0;
};

// Requires Q_n != 0, i.e. n >= 0.
RiccatiResidual riccati_residual(const QuotientSeq& q, int n);

struct BaumSweetReport {
    // (alpha t(t+1))' + alpha^2 + 1 vanishes below `precision`.
    bool residual_vanishes = false;
    // (alpha^2 + t alpha + 1)/(1 + t) has only even powers of 1/t, all >= 2.
    bool square_form_holds = false;
    std::int64_t residual_valuation = 0;
    std::int64_t precision = 0;

    bool holds() const { return residual_vanishes; }
};

// alpha must have 1/t-valuation >= 1 (std::domain_error otherwise). Both forms are
// checked below `precision`, or below what alpha's own precision supports if that is less;
// the report's precision says which.
BaumSweetReport baum_sweet_check(const cfalg::LaurentSeries& alpha, std::int64_t precision);

}  // namespace autocf::riccati
