#pragma once

// Truncated power series in z whose coefficients are polynomials in the alphabet
// letters: the generating series F, the position indicators F_n, the rational part R
// and the univariate Cartier operators.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "autocf/gf2poly.hpp"
#include "autocf/relation.hpp"
#include "autocf/seqcore.hpp"

namespace autocf::zseries {

using gf2poly::Gf2Poly;
using seqcore::EpsSpec;

class ZSeries {
public:
    // Exact zero is not representable; every series knows z^0 .. z^{P-1}.
    explicit ZSeries(std::size_t precision = 0);
    static ZSeries from_coeffs(std::vector<Gf2Poly> coeffs);
    // A polynomial in z (and letters) truncated to precision.
    static ZSeries from_poly(const Gf2Poly& p, std::size_t precision);
    // Sum of z^k over the given exponents below precision.
    static ZSeries indicator(const std::vector<std::uint64_t>& exponents, std::size_t precision);

    std::size_t precision() const { return coeffs_.size(); }
    const std::vector<Gf2Poly>& coeffs() const { return coeffs_; }
    const Gf2Poly& coeff(std::size_t j) const { return coeffs_.at(j); }
    void set_coeff(std::size_t j, Gf2Poly c);
    bool is_zero() const;
    // Index of the first nonzero coefficient, or precision() when all vanish.
    std::size_t order() const;

    ZSeries truncated(std::size_t precision) const;

    ZSeries& operator+=(const ZSeries& other);
    friend ZSeries operator+(ZSeries lhs, const ZSeries& rhs) { return lhs += rhs; }
    // Cauchy product truncated to the smaller precision.
    friend ZSeries operator*(const ZSeries& lhs, const ZSeries& rhs);
    // Coefficient-wise product by a letter polynomial.
    ZSeries operator*(const Gf2Poly& c) const;
    // z^k * s, still truncated to precision().
    ZSeries shifted(std::size_t k) const;
    // s^(2^k): coefficient j moves to j 2^k, coefficients are Frobenius-raised, and the
    // precision is multiplied by 2^k (at most up to 2^20 coefficients).
    ZSeries pow2k(int k) const;
    ZSeries square() const { return pow2k(1); }
    ZSeries pow(unsigned exponent) const;

    friend bool operator==(const ZSeries&, const ZSeries&) = default;

private:
    std::vector<Gf2Poly> coeffs_;
};

// Splits a polynomial in letters and z into its z-coefficients.
std::map<int, Gf2Poly> split_z(const Gf2Poly& p);
Gf2Poly join_z(const std::map<int, Gf2Poly>& parts);

// F = sum s_j z^j.
ZSeries compute_F(const EpsSpec& spec, std::size_t precision);
// R = (sum_{k <= 2^l - 2} s_k z^k) / (1 + z^(2^l)).
ZSeries compute_R(const EpsSpec& spec, std::size_t precision);
// F_n = sum_{k in P_n} z^k for the n-th period slot, after relabeling every slot with a
// distinct letter.
ZSeries compute_Fn(const EpsSpec& spec, std::size_t n, std::size_t precision);
ZSeries compute_F0(const EpsSpec& spec, std::size_t precision);
// The slot-0 indicator of a purely periodic seed with period length d.
ZSeries compute_f(std::size_t period_length, std::size_t precision);
// 1 / (1 + z^step) = sum_k z^(k step).
ZSeries geometric(std::size_t step, std::size_t precision);

// Lambda_r: coefficient j of the result is coefficient 2j + r of s.
ZSeries cartier_z(const ZSeries& s, int r);

// sum_j c_j(z, A) s^j truncated to the precision of s.
ZSeries eval_relation_z(const cfalg::Relation& rel, const ZSeries& s);

// Flattened by ascending z-power, e.g. "a + b*z + a*z^2 + b*z^2 + O(z^4)"; zero prints
// "O(z^P)".
std::string to_string(const ZSeries& s);
// Accepts a polynomial in letters and z followed by "+ O(z^P)".
ZSeries parse_zseries(std::string_view text);

}  // namespace autocf::zseries
