#include "autocf/relation.hpp"

#include <cctype>
#include <sstream>

#include "autocf/errors.hpp"

namespace autocf::cfalg {

Relation::Relation(std::map<int, Gf2Poly> coeffs) {
    for (auto& [j, c] : coeffs) {
        set_coefficient(j, std::move(c));
    }
}

Gf2Poly Relation::coefficient(int j) const {
    const auto it = coeffs_.find(j);
    return it == coeffs_.end() ? Gf2Poly{} : it->second;
}

void Relation::set_coefficient(int j, Gf2Poly c) {
    if (j < 0) {
        throw std::invalid_argument("relation degree must be nonnegative");
    }
    if (c.is_zero()) {
        coeffs_.erase(j);
    } else {
        coeffs_[j] = std::move(c);
    }
}

int Relation::degree() const {
    return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

std::uint32_t Relation::support() const {
    std::uint32_t mask = 0;
    for (const auto& [j, c] : coeffs_) {
        mask |= c.support();
    }
    return mask;
}

gf2poly::Monomial Relation::content() const {
    if (coeffs_.empty()) {
        return {};
    }
    gf2poly::Monomial g = coeffs_.begin()->second.content();
    for (const auto& [j, c] : coeffs_) {
        g = gf2poly::Monomial::gcd(g, c.content());
    }
    return g;
}

Relation Relation::primitive() const {
    const auto g = content();
    if (g.is_one()) {
        return *this;
    }
    Relation out;
    for (const auto& [j, c] : coeffs_) {
        out.coeffs_[j] = c.divided_by(g);
    }
    return out;
}

std::string to_string(const Relation& rel, char unknown) {
    if (rel.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [j, c] : rel.coefficients()) {
        if (!out.empty()) {
            out += " + ";
        }
        std::string power;
        if (j >= 1) {
            power += unknown;
            if (j > 1) {
                power += '^' + std::to_string(j);
            }
        }
        if (j == 0) {
            out += '(' + to_string(c) + ')';
        } else if (c.is_one()) {
            out += power;
        } else {
            out += '(' + to_string(c) + ")*" + power;
        }
    }
    return out;
}

std::string to_file_text(const Relation& rel) {
    std::string out;
    for (const auto& [j, c] : rel.coefficients()) {
        out += "deg " + std::to_string(j) + ": " + to_string(c) + "\n";
    }
    return out;
}

Relation parse_relation_file(std::string_view text) {
    std::map<int, Gf2Poly> coeffs;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        auto line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) {
            line_end = text.size();
        }
        std::string_view line = text.substr(line_start, line_end - line_start);
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i < line.size() && line[i] != '#') {
            if (line.substr(i, 3) != "deg") {
                throw ParseError("expected 'deg'", line_start + i);
            }
            i += 3;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            int j = 0;
            const std::size_t digits_start = i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                j = j * 10 + (line[i] - '0');
                ++i;
            }
            if (i == digits_start) {
                throw ParseError("expected a degree", line_start + i);
            }
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            if (i >= line.size() || line[i] != ':') {
                throw ParseError("expected ':'", line_start + i);
            }
            ++i;
            try {
                coeffs[j] += gf2poly::parse_poly(line.substr(i));
            } catch (const ParseError& e) {
                throw ParseError(std::string("bad coefficient: ") + e.what(), line_start + i + e.position());
            }
        }
        line_start = line_end + 1;
    }
    return Relation(std::move(coeffs));
}

}  // namespace autocf::cfalg
