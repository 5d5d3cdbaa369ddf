#pragma once

// Undetermined-coefficient search for relations sum_j c_j y^j = 0 satisfied by a
// truncated series, with bounded coefficient degrees.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "autocf/cfalg.hpp"

namespace autocf::cfalg {

// Produce the target at (at least) the requested precision. Called again with a doubled
// precision to re-verify candidates.
using InvProvider = std::function<InvSeries(Depth)>;
using ZProvider = std::function<ZSeries(std::size_t)>;

// Evaluates the relation on targets of growing precision until the residual is known
// below `precision`, then reports it truncated there.
ResidualReport verify_relation(const Relation& rel, const InvProvider& target, Depth precision);
ResidualReport verify_relation(const Relation& rel, const ZProvider& target, std::size_t precision);

struct FindOptions {
    int max_ydeg = 1;
    // Bound on the total letter degree of every coefficient.
    int coeff_deg_bound = 0;
    // Bound on the z-degree of every coefficient; only used for ZSeries targets.
    int z_deg_bound = 0;
    Depth precision = 256;
    // Letters allowed in coefficients; empty means the letters occurring in the target.
    std::vector<gf2poly::Var> letters;
    // Reruns at doubled precision when a candidate fails re-verification.
    int max_retries = 3;
};

struct FindResult {
    // Canonical relations, smallest leading unknown first. Empty means no relation within
    // the bounds.
    std::vector<Relation> relations;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
    // Precision of the final solve.
    Depth precision = 0;
    std::vector<std::string> warnings;
};

FindResult find_relation(const InvProvider& target, const FindOptions& options);
FindResult find_relation(const ZProvider& target, const FindOptions& options);

// "ydeg <= 4, coeff deg <= 3, prec 256" (plus the z bound for power series).
std::string bounds_text(const FindOptions& options, bool power_series);

struct DegreeReport {
    // First y-degree with a relation, if any up to the cap.
    std::optional<int> degree;
    Relation relation;
    FindResult result;
    std::string bounds;
};

// find_relation for max_ydeg = 1, 2, ..., ydeg_cap (options.max_ydeg is ignored).
DegreeReport minimal_degree_report(const InvProvider& target, int ydeg_cap, const FindOptions& options);
DegreeReport minimal_degree_report(const ZProvider& target, int ydeg_cap, const FindOptions& options);

}  // namespace autocf::cfalg
