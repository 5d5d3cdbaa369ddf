#pragma once

// Continuants of s(eps), the series 1/CF, CF, G and G_n, and residual checks of
// candidate relations against InvSeries / ZSeries targets.

#include <string>
#include <utility>
#include <vector>

#include "autocf/gf2poly.hpp"
#include "autocf/invseries.hpp"
#include "autocf/relation.hpp"
#include "autocf/seqcore.hpp"
#include "autocf/zseries.hpp"

namespace autocf::cfalg {

using invseries::Depth;
using invseries::InvSeries;
using seqcore::EpsSpec;
using zseries::ZSeries;

struct ContinuantPair {
    Gf2Poly u;
    Gf2Poly v;
    int n = 1;
};

// (u_1, v_1) = (s_0, 1), u_{n+1} = eps_n u_n^2, v_{n+1} = eps_n u_n v_n + 1.
ContinuantPair continuants(const EpsSpec& spec, int n);

// The monomial u_n = eps_{n-1} eps_{n-2}^2 ... eps_0^(2^(n-1)); u_0 = 1.
gf2poly::Monomial u_monomial(const EpsSpec& spec, int n);

// (P, Q) of [q_0, ..., q_m] from (P_{-1}, Q_{-1}) = (1, 0), (P_0, Q_0) = (q_0, 1).
// An empty list gives (1, 0).
std::pair<Gf2Poly, Gf2Poly> general_continuant(const std::vector<Gf2Poly>& quotients);

// sum_{n >= 1} 1/u_n below the given depth.
InvSeries compute_inv_cf(const EpsSpec& spec, Depth precision);
// CF(s(eps)) itself, known below the given depth.
InvSeries compute_cf(const EpsSpec& spec, Depth precision);
// G = sum_{n > l} 1/u_n.
InvSeries compute_G(const EpsSpec& spec, Depth precision);
// G_n = sum_{k >= 0} 1/u_{l + n + k d} for 0 <= n < d.
InvSeries compute_Gn(const EpsSpec& spec, int n, Depth precision);

struct ResidualReport {
    bool vanished = false;
    // Depth norm (InvSeries) or z-order (ZSeries) of the residual; kInfinite when it
    // vanished.
    Depth residual_depth = invseries::kInfinite;
    Depth precision = 0;
};

ResidualReport residual_report(const InvSeries& residual);
ResidualReport residual_report(const ZSeries& residual);
ResidualReport verify_relation(const Relation& rel, const InvSeries& target);
ResidualReport verify_relation(const Relation& rel, const ZSeries& target);

// Named residual of a structural identity (x + y = 0 style) for reporting.
struct IdentityCheck {
    std::string name;
    ResidualReport report;
};

// The identities linking G, G_n, 1/u_l and 1/CF, each as a residual that must vanish.
std::vector<IdentityCheck> series_identities(const EpsSpec& spec, Depth precision);
// The identities linking F, R, the indicators F_n, f and h.
std::vector<IdentityCheck> power_series_identities(const EpsSpec& spec, std::size_t precision);

}  // namespace autocf::cfalg
