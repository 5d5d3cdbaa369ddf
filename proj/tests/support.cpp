#include "support.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace autocf::testing {

using gf2poly::Gf2Poly;
using gf2poly::Monomial;
using gf2poly::UniPoly;
using seqcore::EpsSpec;

int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

EpsSpec random_spec(Rng& rng, int max_pre, int max_per, int letters) {
    const int l = uniform(rng, 0, max_pre);
    const int d = uniform(rng, 1, max_per);
    std::string pre, per;
    for (int i = 0; i < l; ++i) {
        pre += static_cast<char>('a' + uniform(rng, 0, letters - 1));
    }
    for (int i = 0; i < d; ++i) {
        per += static_cast<char>('a' + uniform(rng, 0, letters - 1));
    }
    return EpsSpec(pre, per);
}

EpsSpec random_distinct_spec(Rng& rng, int max_pre, int max_per) {
    const int l = uniform(rng, 0, max_pre);
    const int d = uniform(rng, 1, max_per);
    // skip 't' and 'z' so specs stay usable next to the series variables
    std::string pool = "abcdefghijklmnopqrsuvwxy";
    std::shuffle(pool.begin(), pool.end(), rng);
    return EpsSpec(pool.substr(0, l), pool.substr(l, d));
}

Gf2Poly random_poly(Rng& rng, const std::string& vars, int terms, int max_deg) {
    std::vector<Monomial> out;
    const int count = uniform(rng, 0, terms);
    for (int i = 0; i < count; ++i) {
        Monomial m;
        const int deg = uniform(rng, 0, max_deg);
        for (int k = 0; k < deg; ++k) {
            const auto v = gf2poly::var_of(vars[uniform(rng, 0, static_cast<int>(vars.size()) - 1)]);
            m.set_exponent(v, m.exponent(v) + 1);
        }
        out.push_back(m);
    }
    return Gf2Poly::from_terms(std::move(out));
}

UniPoly random_unipoly(Rng& rng, int max_deg) {
    UniPoly p;
    for (int i = 0; i <= max_deg; ++i) {
        p.set_coeff(i, uniform(rng, 0, 1) == 1);
    }
    return p;
}

UniPoly random_unipoly_exact(Rng& rng, int deg) {
    UniPoly p = random_unipoly(rng, deg - 1);
    p.set_coeff(deg, true);
    return p;
}

std::string word_oracle(const EpsSpec& spec, std::size_t length) {
    std::string w;
    for (std::uint64_t n = 0; w.size() < length; ++n) {
        const std::string prev = w;
        w = prev + spec.eps(n).name + prev;
    }
    w.resize(length);
    return w;
}

Gf2Poly multiply_oracle(const Gf2Poly& x, const Gf2Poly& y) {
    std::map<std::vector<int>, int> count;
    for (const auto& s : x.terms()) {
        for (const auto& t : y.terms()) {
            std::vector<int> e(gf2poly::kVarCount);
            for (int v = 0; v < gf2poly::kVarCount; ++v) {
                e[v] = s.exponent(v) + t.exponent(v);
            }
            ++count[e];
        }
    }
    std::vector<Monomial> out;
    for (const auto& [e, c] : count) {
        if (c % 2 == 1) {
            Monomial m;
            for (int v = 0; v < gf2poly::kVarCount; ++v) {
                m.set_exponent(v, e[v]);
            }
            out.push_back(m);
        }
    }
    return Gf2Poly::from_terms(std::move(out));
}

std::vector<std::string> kernel_prefixes_oracle(const EpsSpec& spec, std::size_t horizon) {
    // The kernel of an ultimately periodic seed is reached within l + d + 2 halvings;
    // the BFS stops on its own once no new prefix appears.
    const int max_k = static_cast<int>(spec.preperiod_length() + spec.period_length()) + 3;
    const std::string s = word_oracle(spec, horizon << max_k);

    std::set<std::string> seen;
    std::deque<std::pair<int, std::uint64_t>> queue{{0, 0}};
    seen.insert(s.substr(0, horizon));
    while (!queue.empty()) {
        const auto [k, r] = queue.front();
        queue.pop_front();
        if (k + 1 > max_k) {
            continue;
        }
        for (std::uint64_t bit = 0; bit < 2; ++bit) {
            const std::uint64_t r2 = r + (bit << k);
            std::string sub(horizon, '?');
            for (std::size_t n = 0; n < horizon; ++n) {
                sub[n] = s[(n << (k + 1)) + r2];
            }
            if (seen.insert(sub).second) {
                queue.emplace_back(k + 1, r2);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::string kernel_element_prefix(const EpsSpec& spec, const seqcore::KernelElement& e,
                                  std::size_t horizon) {
    if (e.kind == seqcore::KernelElement::Kind::Constant) {
        return std::string(horizon, e.constant.name);
    }
    return word_oracle(spec.shifted(e.shift), horizon);
}

}  // namespace autocf::testing
