#include "autocf/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "autocf/errors.hpp"

namespace autocf::gf2poly {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, int exponent) {
    Monomial m;
    m.set_exponent(v, exponent);
    return m;
}

void Monomial::set_exponent(Var v, int exponent) {
    if (v < 0 || v >= kVarCount) {
        throw std::out_of_range("variable id out of range");
    }
    const auto i = static_cast<std::size_t>(v);
    degree_ += exponent - exp_[i];
    exp_[i] = exponent;
    if (exponent != 0) {
        mask_ |= (1u << v);
    } else {
        mask_ &= ~(1u << v);
    }
}

void Monomial::refresh() {
    degree_ = 0;
    mask_ = 0;
    for (int v = 0; v < kVarCount; ++v) {
        const auto e = exp_[static_cast<std::size_t>(v)];
        degree_ += e;
        if (e != 0) {
            mask_ |= (1u << v);
        }
    }
}

bool Monomial::has_negative_exponent() const {
    return std::any_of(exp_.begin(), exp_.end(), [](std::int32_t e) { return e < 0; });
}

bool Monomial::all_even() const {
    return std::all_of(exp_.begin(), exp_.end(), [](std::int32_t e) { return e % 2 == 0; });
}

Monomial& Monomial::operator*=(const Monomial& other) {
    for (std::size_t i = 0; i < exp_.size(); ++i) {
        exp_[i] += other.exp_[i];
    }
    degree_ += other.degree_;
    if ((mask_ & other.mask_) == 0) {
        mask_ |= other.mask_;
    } else {
        // shared variables may cancel
        mask_ = 0;
        for (int v = 0; v < kVarCount; ++v) {
            if (exp_[static_cast<std::size_t>(v)] != 0) {
                mask_ |= (1u << v);
            }
        }
    }
    return *this;
}

Monomial Monomial::inverse() const {
    Monomial m = *this;
    for (auto& e : m.exp_) {
        e = -e;
    }
    m.degree_ = -degree_;
    return m;
}

Monomial Monomial::frobenius(int k) const {
    Monomial m = *this;
    for (auto& e : m.exp_) {
        e <<= k;
    }
    m.degree_ = degree_ << k;
    return m;
}

Monomial Monomial::halved() const {
    Monomial m = *this;
    for (auto& e : m.exp_) {
        e /= 2;
    }
    m.degree_ = degree_ / 2;
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < m.exp_.size(); ++i) {
        m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    }
    m.refresh();
    return m;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ mask_;
    std::uint32_t bits = mask_;
    while (bits != 0) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(exp_[static_cast<std::size_t>(v)])) +
             (static_cast<std::uint64_t>(v) << 40);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) {
        return c;
    }
    for (Var v = 0; v < kVarCount; ++v) {
        if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    for (Var v = 0; v < kVarCount; ++v) {
        const int e = m.exponent(v);
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += var_name(v);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

void canonicalize_terms(std::vector<Monomial>& terms) {
    std::sort(terms.begin(), terms.end(), GrlexDescending{});
    std::size_t out = 0;
    std::size_t i = 0;
    while (i < terms.size()) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i]) {
            ++j;
        }
        if ((j - i) % 2 == 1) {
            terms[out++] = terms[i];
        }
        i = j;
    }
    terms.resize(out);
}

std::vector<Monomial> xor_terms(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const auto c = grlex_compare(a[i], b[j]);
        if (c == std::strong_ordering::greater) {
            out.push_back(a[i++]);
        } else if (c == std::strong_ordering::less) {
            out.push_back(b[j++]);
        } else {
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return out;
}

// ---------------------------------------------------------------------------
// Gf2Poly

Gf2Poly Gf2Poly::one() {
    return monomial(Monomial{});
}

Gf2Poly Gf2Poly::variable(Var v, int exponent) {
    if (exponent < 0) {
        throw std::invalid_argument("Gf2Poly exponents must be nonnegative");
    }
    return monomial(Monomial::of(v, exponent));
}

Gf2Poly Gf2Poly::monomial(const Monomial& m) {
    if (m.has_negative_exponent()) {
        throw std::invalid_argument("Gf2Poly exponents must be nonnegative");
    }
    Gf2Poly p;
    p.terms_.push_back(m);
    return p;
}

Gf2Poly Gf2Poly::from_terms(std::vector<Monomial> terms) {
    for (const auto& m : terms) {
        if (m.has_negative_exponent()) {
            throw std::invalid_argument("Gf2Poly exponents must be nonnegative");
        }
    }
    canonicalize_terms(terms);
    Gf2Poly p;
    p.terms_ = std::move(terms);
    return p;
}

int Gf2Poly::total_degree() const {
    // grlex-descending: the first term has the largest degree
    return terms_.empty() ? -1 : terms_.front().degree();
}

int Gf2Poly::degree_in(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& m : terms_) {
        d = std::max(d, m.exponent(v));
    }
    return d;
}

std::uint32_t Gf2Poly::support() const {
    std::uint32_t mask = 0;
    for (const auto& m : terms_) {
        mask |= m.support();
    }
    return mask;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
    if (other.terms_.empty()) {
        return *this;
    }
    terms_ = xor_terms(terms_, other.terms_);
    return *this;
}

Gf2Poly operator*(const Gf2Poly& lhs, const Gf2Poly& rhs) {
    std::vector<Monomial> products;
    products.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& x : lhs.terms_) {
        for (const auto& y : rhs.terms_) {
            products.push_back(x * y);
        }
    }
    canonicalize_terms(products);
    Gf2Poly p;
    p.terms_ = std::move(products);
    return p;
}

Gf2Poly Gf2Poly::operator*(const Monomial& m) const {
    if (m.has_negative_exponent()) {
        throw std::invalid_argument("Gf2Poly exponents must be nonnegative");
    }
    Gf2Poly p;
    p.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves grlex order
    for (const auto& x : terms_) {
        p.terms_.push_back(x * m);
    }
    return p;
}

Gf2Poly Gf2Poly::pow(unsigned exponent) const {
    Gf2Poly result = one();
    Gf2Poly base = *this;
    while (exponent != 0) {
        if (exponent & 1u) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent != 0) {
            base = base.pow2k(1);
        }
    }
    return result;
}

Gf2Poly Gf2Poly::pow2k(int k) const {
    if (k < 0) {
        throw std::invalid_argument("pow2k requires k >= 0");
    }
    Gf2Poly p;
    p.terms_.reserve(terms_.size());
    // Frobenius is injective on monomials and preserves grlex order
    for (const auto& m : terms_) {
        p.terms_.push_back(m.frobenius(k));
    }
    return p;
}

Gf2Poly Gf2Poly::derivative(Var v) const {
    std::vector<Monomial> out;
    for (const auto& m : terms_) {
        const int e = m.exponent(v);
        if (e % 2 == 1) {
            Monomial d = m;
            d.set_exponent(v, e - 1);
            out.push_back(d);
        }
    }
    return from_terms(std::move(out));
}

std::optional<Gf2Poly> Gf2Poly::sqrt() const {
    Gf2Poly root;
    root.terms_.reserve(terms_.size());
    for (const auto& m : terms_) {
        if (!m.all_even()) {
            return std::nullopt;
        }
        root.terms_.push_back(m.halved());
    }
    return root;
}

Monomial Gf2Poly::content() const {
    if (terms_.empty()) {
        return Monomial{};
    }
    Monomial g = terms_.front();
    for (const auto& m : terms_) {
        g = Monomial::gcd(g, m);
    }
    return g;
}

Gf2Poly Gf2Poly::divided_by(const Monomial& m) const {
    const Monomial inv = m.inverse();
    Gf2Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& x : terms_) {
        Monomial q = x * inv;
        if (q.has_negative_exponent()) {
            throw std::invalid_argument("monomial does not divide polynomial");
        }
        p.terms_.push_back(q);
    }
    return p;
}

bool is_square(const Gf2Poly& p) {
    return p.sqrt().has_value();
}

// ---------------------------------------------------------------------------
// Parsing and printing

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, bool allow_negative)
        : text_(text), allow_negative_(allow_negative) {}

    std::vector<Monomial> parse() {
        std::vector<Monomial> terms;
        skip_ws();
        if (pos_ >= text_.size()) {
            throw ParseError("empty polynomial", pos_);
        }
        append_term(terms);
        skip_ws();
        while (pos_ < text_.size()) {
            if (text_[pos_] != '+') {
                throw ParseError(std::string("expected '+' but found '") + text_[pos_] + "'", pos_);
            }
            ++pos_;
            append_term(terms);
            skip_ws();
        }
        canonicalize_terms(terms);
        return terms;
    }

private:
    void append_term(std::vector<Monomial>& terms) {
        skip_ws();
        if (pos_ >= text_.size()) {
            throw ParseError("expected a term", pos_);
        }
        const char c = text_[pos_];
        if (c == '0' || c == '1') {
            ++pos_;
            if (c == '1') {
                terms.emplace_back();
            }
            return;
        }
        Monomial m = parse_factor();
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            m *= parse_factor();
            skip_ws();
        }
        terms.push_back(m);
    }

    Monomial parse_factor() {
        skip_ws();
        if (pos_ >= text_.size() || !is_var_char(text_[pos_])) {
            throw ParseError("expected a variable", pos_);
        }
        const Var v = var_of(text_[pos_++]);
        int e = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            bool negative = false;
            if (pos_ < text_.size() && text_[pos_] == '-') {
                if (!allow_negative_) {
                    throw ParseError("negative exponent not allowed", pos_);
                }
                negative = true;
                ++pos_;
            }
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                throw ParseError("expected an exponent", pos_);
            }
            long value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                value = value * 10 + (text_[pos_] - '0');
                if (value > (1L << 30)) {
                    throw ParseError("exponent too large", pos_);
                }
                ++pos_;
            }
            e = static_cast<int>(negative ? -value : value);
        }
        return Monomial::of(v, e);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    bool allow_negative_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Monomial> parse_terms(std::string_view text, bool allow_negative) {
    return PolyParser(text, allow_negative).parse();
}

Gf2Poly parse_poly(std::string_view text) {
    return Gf2Poly::from_terms(parse_terms(text, false));
}

std::string to_string(const Gf2Poly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& m : p.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += to_string(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly UniPoly::monomial(int power) {
    if (power < 0) {
        throw std::invalid_argument("UniPoly power must be nonnegative");
    }
    UniPoly p;
    p.set_coeff(power, true);
    return p;
}

UniPoly UniPoly::from_words(std::vector<std::uint64_t> words) {
    UniPoly p;
    p.words_ = std::move(words);
    p.trim();
    return p;
}

void UniPoly::trim() {
    while (!words_.empty() && words_.back() == 0) {
        words_.pop_back();
    }
}

int UniPoly::degree() const {
    if (words_.empty()) {
        return -1;
    }
    return static_cast<int>(words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back());
}

bool UniPoly::coeff(int power) const {
    if (power < 0) {
        return false;
    }
    const auto w = static_cast<std::size_t>(power / 64);
    return w < words_.size() && ((words_[w] >> (power % 64)) & 1u) != 0;
}

void UniPoly::set_coeff(int power, bool value) {
    if (power < 0) {
        throw std::invalid_argument("UniPoly power must be nonnegative");
    }
    const auto w = static_cast<std::size_t>(power / 64);
    if (w >= words_.size()) {
        if (!value) {
            return;
        }
        words_.resize(w + 1, 0);
    }
    const std::uint64_t bit = std::uint64_t{1} << (power % 64);
    if (value) {
        words_[w] |= bit;
    } else {
        words_[w] &= ~bit;
        trim();
    }
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
    if (other.words_.size() > words_.size()) {
        words_.resize(other.words_.size(), 0);
    }
    for (std::size_t i = 0; i < other.words_.size(); ++i) {
        words_[i] ^= other.words_[i];
    }
    trim();
    return *this;
}

UniPoly UniPoly::shifted(int power) const {
    if (words_.empty()) {
        return {};
    }
    const auto word_shift = static_cast<std::size_t>(power / 64);
    const int bit_shift = power % 64;
    std::vector<std::uint64_t> out(words_.size() + word_shift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out[i + word_shift] ^= words_[i] << bit_shift;
        if (bit_shift != 0) {
            out[i + word_shift + 1] ^= words_[i] >> (64 - bit_shift);
        }
    }
    return from_words(std::move(out));
}

UniPoly operator*(const UniPoly& lhs, const UniPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return {};
    }
    const UniPoly& small = lhs.words_.size() <= rhs.words_.size() ? lhs : rhs;
    const UniPoly& big = &small == &lhs ? rhs : lhs;
    std::vector<std::uint64_t> out(lhs.words_.size() + rhs.words_.size() + 1, 0);
    for (std::size_t w = 0; w < small.words_.size(); ++w) {
        std::uint64_t bits = small.words_[w];
        while (bits != 0) {
            const int b = std::countr_zero(bits);
            bits &= bits - 1;
            for (std::size_t i = 0; i < big.words_.size(); ++i) {
                out[i + w] ^= big.words_[i] << b;
                if (b != 0) {
                    out[i + w + 1] ^= big.words_[i] >> (64 - b);
                }
            }
        }
    }
    return UniPoly::from_words(std::move(out));
}

UniPoly UniPoly::square() const {
    UniPoly p;
    for (int i = 0; i <= degree(); ++i) {
        if (coeff(i)) {
            p.set_coeff(2 * i, true);
        }
    }
    return p;
}

UniPoly UniPoly::derivative() const {
    UniPoly p;
    for (int i = 1; i <= degree(); i += 2) {
        if (coeff(i)) {
            p.set_coeff(i - 1, true);
        }
    }
    return p;
}

std::optional<UniPoly> UniPoly::sqrt() const {
    UniPoly root;
    for (int i = 0; i <= degree(); ++i) {
        if (!coeff(i)) {
            continue;
        }
        if (i % 2 == 1) {
            return std::nullopt;
        }
        root.set_coeff(i / 2, true);
    }
    return root;
}

bool is_square(const UniPoly& p) {
    return p.sqrt().has_value();
}

UniPoly parse_unipoly(std::string_view text, char var) {
    const Gf2Poly p = parse_poly(text);
    UniPoly out;
    for (const auto& m : p.terms()) {
        if ((m.support() & ~(1u << var_of(var))) != 0) {
            throw ParseError(std::string("only the variable '") + var + "' is allowed", 0);
        }
        out += UniPoly::monomial(m.exponent(var_of(var)));
    }
    return out;
}

std::string to_string(const UniPoly& p, char var) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        if (!p.coeff(i)) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        if (i == 0) {
            out += "1";
        } else {
            out += var;
            if (i != 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

UniPoly specialize(const Gf2Poly& p, const std::array<std::optional<UniPoly>, kVarCount>& values) {
    UniPoly out;
    for (const auto& m : p.terms()) {
        UniPoly term = UniPoly::one();
        for (Var v = 0; v < kVarCount; ++v) {
            int e = m.exponent(v);
            if (e == 0) {
                continue;
            }
            const auto& value = values[static_cast<std::size_t>(v)];
            if (!value) {
                throw std::invalid_argument(std::string("no value for variable ") + var_name(v));
            }
            UniPoly base = *value;
            while (e != 0) {
                if (e & 1) {
                    term *= base;
                }
                e >>= 1;
                if (e != 0) {
                    base = base.square();
                }
            }
        }
        out += term;
    }
    return out;
}

}  // namespace autocf::gf2poly
