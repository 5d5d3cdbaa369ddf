#pragma once

// Random generators and brute-force oracles shared by the unit tests, the property
// suites and the acceptance runner. Oracles here deliberately avoid the library's own
// fast paths: sequences come from the word recursion, products from term counting.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "autocf/gf2poly.hpp"
#include "autocf/seqcore.hpp"

namespace autocf::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

// Random spec with preperiod length <= max_pre, period length in [1, max_per], letters
// drawn from the first `letters` letters.
seqcore::EpsSpec random_spec(Rng& rng, int max_pre, int max_per, int letters);
// Same shape with pairwise distinct letters.
seqcore::EpsSpec random_distinct_spec(Rng& rng, int max_pre, int max_per);

// Polynomial in the given variables with up to `terms` terms of degree <= max_deg.
gf2poly::Gf2Poly random_poly(Rng& rng, const std::string& vars, int terms, int max_deg);
gf2poly::UniPoly random_unipoly(Rng& rng, int max_deg);
// Degree exactly `deg`.
gf2poly::UniPoly random_unipoly_exact(Rng& rng, int deg);

// Letter names of s(eps) for indices < length, from W_{n+1} = W_n e_n W_n as strings.
std::string word_oracle(const seqcore::EpsSpec& spec, std::size_t length);

// Product by counting how often each monomial arises (mod 2).
gf2poly::Gf2Poly multiply_oracle(const gf2poly::Gf2Poly& x, const gf2poly::Gf2Poly& y);

// Distinct length-`horizon` prefixes reachable from s by n -> 2n + r, found by BFS over
// (k, r) with s(2^k n + r), using word_oracle.
std::vector<std::string> kernel_prefixes_oracle(const seqcore::EpsSpec& spec, std::size_t horizon);

// Prefix of the sequence a kernel element denotes.
std::string kernel_element_prefix(const seqcore::EpsSpec& spec, const seqcore::KernelElement& e,
                                  std::size_t horizon);

}  // namespace autocf::testing
