#include "autocf/json_io.hpp"

#include <stdexcept>

namespace autocf::io {

using gf2poly::Gf2Poly;
using gf2poly::Monomial;
using invseries::Depth;
using invseries::kInfinite;

namespace {

json depth_or_null(Depth d) {
    return d >= kInfinite ? json(nullptr) : json(d);
}

Depth depth_from(const json& j) {
    return j.is_null() ? kInfinite : j.get<Depth>();
}

gf2poly::Var var_from(const json& j) {
    const auto name = j.get<std::string>();
    if (name.size() != 1 || !gf2poly::is_var_char(name[0])) {
        throw std::invalid_argument("bad variable name in JSON: " + name);
    }
    return gf2poly::var_of(name[0]);
}

// [var, exp] pairs in variable order; `sign` flips exponents (inverse-power form).
json monomial_to_json(const Monomial& m, int sign) {
    json pairs = json::array();
    for (gf2poly::Var v = 0; v < gf2poly::kVarCount; ++v) {
        if (m.exponent(v) != 0) {
            pairs.push_back(json::array({std::string(1, gf2poly::var_name(v)), sign * m.exponent(v)}));
        }
    }
    return pairs;
}

Monomial monomial_from_json(const json& pairs, int sign) {
    Monomial m;
    for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("monomial entries must be [var, exp] pairs");
        }
        const auto v = var_from(pair[0]);
        m.set_exponent(v, m.exponent(v) + sign * pair[1].get<int>());
    }
    return m;
}

}  // namespace

json to_json(const Gf2Poly& p) {
    json terms = json::array();
    for (const auto& m : p.terms()) {
        terms.push_back(monomial_to_json(m, 1));
    }
    return terms;
}

Gf2Poly poly_from_json(const json& j) {
    std::vector<Monomial> terms;
    for (const auto& t : j) {
        terms.push_back(monomial_from_json(t, 1));
    }
    return Gf2Poly::from_terms(std::move(terms));
}

json to_json(const invseries::InvSeries& s) {
    json terms = json::array();
    for (const auto& m : s.terms()) {
        terms.push_back(json::array({monomial_to_json(m, -1), invseries::depth_of(m)}));
    }
    return {{"terms", terms}, {"precision", depth_or_null(s.precision())}};
}

invseries::InvSeries invseries_from_json(const json& j) {
    std::vector<Monomial> terms;
    for (const auto& t : j.at("terms")) {
        Monomial m = monomial_from_json(t.at(0), -1);
        if (invseries::depth_of(m) != t.at(1).get<Depth>()) {
            throw std::invalid_argument("term depth does not match its exponents");
        }
        terms.push_back(m);
    }
    return invseries::InvSeries::from_terms(std::move(terms), depth_from(j.at("precision")));
}

json to_json(const zseries::ZSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return {{"coefficients", coeffs}, {"precision", s.precision()}};
}

zseries::ZSeries zseries_from_json(const json& j) {
    std::vector<Gf2Poly> coeffs;
    for (const auto& c : j.at("coefficients")) {
        coeffs.push_back(poly_from_json(c));
    }
    if (coeffs.size() != j.at("precision").get<std::size_t>()) {
        throw std::invalid_argument("coefficient count must equal the precision");
    }
    return zseries::ZSeries::from_coeffs(std::move(coeffs));
}

json to_json(const cfalg::Relation& rel) {
    json coeffs = json::array();
    for (const auto& [deg, c] : rel.coefficients()) {
        coeffs.push_back({{"deg", deg}, {"poly", to_json(c)}});
    }
    return {{"coefficients", coeffs}, {"text", cfalg::to_string(rel)}};
}

cfalg::Relation relation_from_json(const json& j) {
    std::map<int, Gf2Poly> coeffs;
    for (const auto& entry : j.at("coefficients")) {
        coeffs[entry.at("deg").get<int>()] += poly_from_json(entry.at("poly"));
    }
    return cfalg::Relation(std::move(coeffs));
}

json to_json(const cfalg::ResidualReport& report) {
    return {{"vanished", report.vanished},
            {"residual_depth", depth_or_null(report.residual_depth)},
            {"precision", depth_or_null(report.precision)}};
}

cfalg::ResidualReport report_from_json(const json& j) {
    return {j.at("vanished").get<bool>(), depth_from(j.at("residual_depth")),
            depth_from(j.at("precision"))};
}

json to_json(const cfalg::LaurentSeries& s) {
    return {{"powers", s.support()}, {"precision", depth_or_null(s.precision())}};
}

cfalg::LaurentSeries laurent_from_json(const json& j) {
    return cfalg::LaurentSeries::from_powers(j.at("powers").get<std::vector<std::int64_t>>(),
                                             depth_from(j.at("precision")));
}

}  // namespace autocf::io
