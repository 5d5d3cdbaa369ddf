#pragma once

// Candidate algebraic equation sum_j c_j * y^j = 0 with polynomial coefficients in the
// alphabet letters (and z for power-series relations).

#include <map>
#include <string>
#include <string_view>

#include "autocf/gf2poly.hpp"

namespace autocf::cfalg {

using gf2poly::Gf2Poly;

class Relation {
public:
    Relation() = default;
    explicit Relation(std::map<int, Gf2Poly> coeffs);

    // Nonzero coefficients keyed by y-exponent.
    const std::map<int, Gf2Poly>& coefficients() const { return coeffs_; }
    // Zero when absent.
    Gf2Poly coefficient(int j) const;
    void set_coefficient(int j, Gf2Poly c);

    // Highest y-exponent with a nonzero coefficient; -1 for the zero relation.
    int degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    std::uint32_t support() const;

    // Largest monomial dividing every coefficient.
    gf2poly::Monomial content() const;
    // Divides out content().
    Relation primitive() const;

    friend bool operator==(const Relation&, const Relation&) = default;

private:
    std::map<int, Gf2Poly> coeffs_;
};

// One-line canonical form, ascending in j: "(c_0) + (c_1)*y + y^2 + ...". A unit
// coefficient is omitted for j >= 1; c_0 is always parenthesized.
std::string to_string(const Relation& rel, char unknown = 'y');

// Relation file: one line "deg <j>: <poly>" per nonzero coefficient, ascending j.
std::string to_file_text(const Relation& rel);
// Blank lines and lines starting with '#' are ignored. Repeated degrees are summed.
Relation parse_relation_file(std::string_view text);

}  // namespace autocf::cfalg
