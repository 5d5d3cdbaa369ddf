#pragma once

// JSON forms of the library's values (nlohmann::json).
//
//   Gf2Poly        [[["a",2],["b",1]], [["b",3]], []]     one list of [var, exp] per term
//   InvSeries      {"terms": [[[["a",1],["b",2]], 3], ...], "precision": 64 | null}
//                  exponents are inverse exponents n_i of prod a_i^-n_i, then the depth
//   ZSeries        {"coefficients": [<poly>, ...], "precision": P}
//   Relation       {"coefficients": [{"deg": j, "poly": <poly>}, ...], "text": "..."}
//   ResidualReport {"vanished": bool, "residual_depth": n | null, "precision": p | null}
//   LaurentSeries  {"powers": [k, ...], "precision": p | null}   k = power of 1/t
//
// null stands for an exact value / infinite depth.

#include <json.hpp>

#include "autocf/cfalg.hpp"
#include "autocf/laurent.hpp"

namespace autocf::io {

using nlohmann::json;

json to_json(const gf2poly::Gf2Poly& p);
gf2poly::Gf2Poly poly_from_json(const json& j);

json to_json(const invseries::InvSeries& s);
invseries::InvSeries invseries_from_json(const json& j);

json to_json(const zseries::ZSeries& s);
zseries::ZSeries zseries_from_json(const json& j);

json to_json(const cfalg::Relation& rel);
cfalg::Relation relation_from_json(const json& j);

json to_json(const cfalg::ResidualReport& report);
cfalg::ResidualReport report_from_json(const json& j);

json to_json(const cfalg::LaurentSeries& s);
cfalg::LaurentSeries laurent_from_json(const json& j);

}  // namespace autocf::io
