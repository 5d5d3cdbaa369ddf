#pragma once

// Sparse multivariate polynomials over F2 and dense univariate polynomials over F2[t].
//
// Variables are the 26 lowercase letters; 'a'..'y' are alphabet letters, 'z' is the
// power-series variable and 't' doubles as the specialization variable of UniPoly.
// Coefficients are implicit ones: a polynomial is a set of monomials and addition is
// symmetric difference.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace autocf::gf2poly {

using Var = int;

inline constexpr int kVarCount = 26;
inline constexpr Var kVarT = 't' - 'a';
inline constexpr Var kVarZ = 'z' - 'a';

constexpr Var var_of(char c) { return c - 'a'; }
constexpr char var_name(Var v) { return static_cast<char>('a' + v); }
constexpr bool is_var_char(char c) { return c >= 'a' && c <= 'z'; }

// Exponent vector over the fixed variable universe. Exponents may be negative so the
// same type serves the inverse-power terms of invseries.
class Monomial {
public:
    Monomial() = default;

    static Monomial of(Var v, int exponent = 1);

    int exponent(Var v) const { return exp_[static_cast<std::size_t>(v)]; }
    void set_exponent(Var v, int exponent);

    // Sum of exponents; for inverse-power terms this is minus the depth.
    int degree() const { return degree_; }
    // Bit v set iff the exponent of v is nonzero.
    std::uint32_t support() const { return mask_; }
    bool is_one() const { return mask_ == 0; }
    bool has_negative_exponent() const;
    bool all_even() const;

    Monomial& operator*=(const Monomial& other);
    friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

    Monomial inverse() const;
    // Every exponent multiplied by 2^k.
    Monomial frobenius(int k) const;
    // Every exponent halved; requires all_even().
    Monomial halved() const;
    // Per-variable minimum.
    static Monomial gcd(const Monomial& a, const Monomial& b);

    std::size_t hash() const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.mask_ == b.mask_ && a.exp_ == b.exp_;
    }

private:
    void refresh();

    std::array<std::int32_t, kVarCount> exp_{};
    std::int32_t degree_ = 0;
    std::uint32_t mask_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Graded lexicographic comparison: total degree first, then exponent of 'a', 'b', ...
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

// Comparator placing the grlex-largest monomial first (canonical print order).
struct GrlexDescending {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) == std::strong_ordering::greater;
    }
};

std::string to_string(const Monomial& m);

// Sorts into grlex-descending order and removes monomials occurring an even number of
// times (char-2 collapse).
void canonicalize_terms(std::vector<Monomial>& terms);

// Symmetric difference of two canonical term lists.
std::vector<Monomial> xor_terms(const std::vector<Monomial>& a, const std::vector<Monomial>& b);

class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly one();
    static Gf2Poly variable(Var v, int exponent = 1);
    static Gf2Poly monomial(const Monomial& m);
    static Gf2Poly from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.front().is_one(); }
    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(Var v) const;
    std::uint32_t support() const;

    Gf2Poly& operator+=(const Gf2Poly& other);
    friend Gf2Poly operator+(Gf2Poly lhs, const Gf2Poly& rhs) { return lhs += rhs; }
    friend Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs);
    Gf2Poly& operator*=(const Gf2Poly& other) { return *this = *this * other; }
    Gf2Poly operator*(const Monomial& m) const;

    Gf2Poly pow(unsigned exponent) const;
    // p^(2^k): every exponent multiplied by 2^k.
    Gf2Poly pow2k(int k) const;
    Gf2Poly derivative(Var v) const;
    // Square root when every exponent of every term is even.
    std::optional<Gf2Poly> sqrt() const;
    // Largest monomial dividing every term (the unit monomial for zero).
    Monomial content() const;
    // Exact division by a monomial that divides every term.
    Gf2Poly divided_by(const Monomial& m) const;

    friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

private:
    std::vector<Monomial> terms_;
};

bool is_square(const Gf2Poly& p);

// Grammar: poly := term ('+' term)*; term := factor ('*' factor)* | '1' | '0';
// factor := var ('^' uint)?. Whitespace is insignificant.
Gf2Poly parse_poly(std::string_view text);
// Same grammar returning canonical terms; with allow_negative an exponent may carry a
// leading '-' (the inverse-power text form of invseries).
std::vector<Monomial> parse_terms(std::string_view text, bool allow_negative);
std::string to_string(const Gf2Poly& p);

// Dense polynomial in F2[t]; bit i is the coefficient of t^i.
class UniPoly {
public:
    UniPoly() = default;

    static UniPoly one() { return monomial(0); }
    static UniPoly monomial(int power);
    static UniPoly from_words(std::vector<std::uint64_t> words);

    // -1 for zero.
    int degree() const;
    bool coeff(int power) const;
    void set_coeff(int power, bool value);
    bool is_zero() const { return words_.empty(); }
    bool is_constant() const { return degree() <= 0; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    UniPoly& operator+=(const UniPoly& other);
    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& other) { return *this = *this * other; }

    UniPoly square() const;
    UniPoly shifted(int power) const;
    UniPoly derivative() const;
    std::optional<UniPoly> sqrt() const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();

    std::vector<std::uint64_t> words_;
};

bool is_square(const UniPoly& p);

// Accepts the polynomial grammar with the single variable `var`.
UniPoly parse_unipoly(std::string_view text, char var = 't');
std::string to_string(const UniPoly& p, char var = 't');

// Substitutes a UniPoly for each variable occurring in p. Variables without a
// substitute raise std::invalid_argument.
UniPoly specialize(const Gf2Poly& p, const std::array<std::optional<UniPoly>, kVarCount>& values);

}  // namespace autocf::gf2poly
