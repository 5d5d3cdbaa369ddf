#include "autocf/finder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "autocf/linalg.hpp"

namespace autocf::cfalg {

using gf2poly::Monomial;
using gf2poly::MonomialHash;
using invseries::kInfinite;
using linalg::BitVec;

namespace {

// Monomials in `letters` of total degree <= bound (times z^k, k <= z_bound), grlex ascending.
std::vector<Monomial> coefficient_monomials(const std::vector<gf2poly::Var>& letters, int bound,
                                            int z_bound) {
    std::vector<Monomial> out;
    Monomial current;
    auto recurse = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == letters.size()) {
            out.push_back(current);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current.set_exponent(letters[i], e);
            self(self, i + 1, remaining - e);
        }
        current.set_exponent(letters[i], 0);
    };
    recurse(recurse, 0, bound);
    if (z_bound > 0) {
        const std::size_t base = out.size();
        for (int k = 1; k <= z_bound; ++k) {
            const Monomial zk = Monomial::of(gf2poly::kVarZ, k);
            for (std::size_t r = 0; r < base; ++r) {
                out.push_back(out[r] * zk);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return gf2poly::grlex_compare(a, b) == std::strong_ordering::less;
    });
    return out;
}

std::vector<gf2poly::Var> letters_of_mask(std::uint32_t mask) {
    std::vector<gf2poly::Var> out;
    for (gf2poly::Var v = 0; v < gf2poly::kVarCount; ++v) {
        if (v != gf2poly::kVarZ && ((mask >> v) & 1u)) {
            out.push_back(v);
        }
    }
    return out;
}

// Sparse column entries keyed by row monomial, assembled into dense rows.
class SystemBuilder {
public:
    explicit SystemBuilder(std::size_t columns) : columns_(columns) {}

    void add(const Monomial& row_key, std::size_t column) {
        const auto [it, fresh] = rows_.try_emplace(row_key, static_cast<std::uint32_t>(rows_.size()));
        entries_.push_back({it->second, static_cast<std::uint32_t>(column)});
    }

    std::size_t equations() const { return rows_.size(); }

    // Feeds every row to the basis in row-id order; stops early at full rank.
    linalg::EchelonBasis solve() {
        std::sort(entries_.begin(), entries_.end());
        linalg::EchelonBasis basis(columns_);
        std::size_t i = 0;
        while (i < entries_.size() && !basis.full_rank()) {
            const std::uint32_t row = entries_[i].first;
            BitVec bits(columns_);
            while (i < entries_.size() && entries_[i].first == row) {
                bits.flip(entries_[i].second);
                ++i;
            }
            if (!bits.is_zero()) {
                basis.insert(std::move(bits));
            }
        }
        return basis;
    }

private:
    std::size_t columns_;
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> rows_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries_;
};

struct Solve {
    std::vector<Relation> relations;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    std::size_t rank = 0;
};

Solve finish(SystemBuilder& builder, const std::vector<Monomial>& monos, int max_ydeg) {
    const std::size_t m = monos.size();
    Solve solve;
    solve.unknowns = m * static_cast<std::size_t>(max_ydeg + 1);
    solve.equations = builder.equations();
    const auto basis = builder.solve();
    solve.rank = basis.rank();
    for (const auto& x : basis.nullspace()) {
        std::map<int, std::vector<Monomial>> coeffs;
        for (auto idx : x.ones()) {
            coeffs[static_cast<int>(idx / m)].push_back(monos[idx % m]);
        }
        std::map<int, Gf2Poly> polys;
        for (auto& [j, terms] : coeffs) {
            polys[j] = Gf2Poly::from_terms(std::move(terms));
        }
        solve.relations.push_back(Relation(std::move(polys)).primitive());
    }
    return solve;
}

Solve solve_inv(const InvSeries& target, const FindOptions& options,
                const std::vector<gf2poly::Var>& letters) {
    const auto monos = coefficient_monomials(letters, options.coeff_deg_bound, 0);
    std::vector<InvSeries> powers{InvSeries::one()};
    for (int j = 1; j <= options.max_ydeg; ++j) {
        powers.push_back(j % 2 == 0 ? powers[static_cast<std::size_t>(j / 2)].square()
                                    : powers.back() * target);
    }
    Depth cutoff = options.precision;
    for (std::size_t j = 1; j < powers.size(); ++j) {
        cutoff = std::min(cutoff, powers[j].precision());
    }
    cutoff -= options.coeff_deg_bound;

    const std::size_t m = monos.size();
    SystemBuilder builder(m * powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) {
        for (std::size_t r = 0; r < m; ++r) {
            const Depth dm = invseries::depth_of(monos[r]);
            for (const auto& t : powers[j].terms()) {
                if (invseries::depth_of(t) + dm >= cutoff) {
                    break;
                }
                builder.add(t * monos[r], j * m + r);
            }
        }
    }
    return finish(builder, monos, options.max_ydeg);
}

Solve solve_z(const ZSeries& target, const FindOptions& options,
              const std::vector<gf2poly::Var>& letters) {
    const auto monos = coefficient_monomials(letters, options.coeff_deg_bound, options.z_deg_bound);
    const std::size_t p = target.precision();
    std::vector<ZSeries> powers{ZSeries::from_poly(Gf2Poly::one(), p)};
    for (int j = 1; j <= options.max_ydeg; ++j) {
        powers.push_back(j % 2 == 0 ? powers[static_cast<std::size_t>(j / 2)].square()
                                    : powers.back() * target);
    }
    const std::size_t m = monos.size();
    SystemBuilder builder(m * powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) {
        for (std::size_t r = 0; r < m; ++r) {
            const auto k = static_cast<std::size_t>(monos[r].exponent(gf2poly::kVarZ));
            for (std::size_t i = 0; i + k < p; ++i) {
                for (const auto& t : powers[j].coeff(i).terms()) {
                    builder.add(t * monos[r] * Monomial::of(gf2poly::kVarZ, static_cast<int>(i)),
                                j * m + r);
                }
            }
        }
    }
    return finish(builder, monos, options.max_ydeg);
}

template <typename Series, typename Provider, typename SolveFn, typename LettersFn>
FindResult find_with_retries(const Provider& provider, const FindOptions& options, SolveFn solve_fn,
                             LettersFn letters_fn) {
    if (options.max_ydeg < 1) {
        throw std::invalid_argument("max_ydeg must be >= 1");
    }
    if (options.coeff_deg_bound < 0 || options.z_deg_bound < 0) {
        throw std::invalid_argument("degree bounds must be nonnegative");
    }
    if (options.precision < 1) {
        throw std::invalid_argument("precision must be >= 1");
    }
    FindOptions current = options;
    FindResult result;
    for (int attempt = 0;; ++attempt) {
        const Series target = provider(current.precision);
        const auto letters = current.letters.empty() ? letters_fn(target) : current.letters;
        Solve solve = solve_fn(target, current, letters);
        result.unknowns = solve.unknowns;
        result.equations = solve.equations;
        result.rank = solve.rank;
        result.precision = current.precision;

        const Series check = provider(2 * current.precision);
        std::vector<Relation> confirmed;
        std::size_t spurious = 0;
        for (auto& rel : solve.relations) {
            if (verify_relation(rel, check).vanished) {
                confirmed.push_back(std::move(rel));
            } else {
                ++spurious;
            }
        }
        if (spurious == 0 || attempt >= options.max_retries) {
            if (spurious != 0) {
                result.warnings.push_back(std::to_string(spurious) +
                                          " candidate(s) failed re-verification at precision " +
                                          std::to_string(2 * current.precision) + " and were dropped");
            }
            if (result.equations < result.unknowns) {
                result.warnings.push_back("under-determined system: " + std::to_string(result.equations) +
                                          " equations for " + std::to_string(result.unknowns) +
                                          " unknowns");
            }
            result.relations = std::move(confirmed);
            return result;
        }
        current.precision *= 2;
    }
}

template <typename Provider>
DegreeReport degree_search(const Provider& target, int ydeg_cap, const FindOptions& options,
                           bool power_series) {
    DegreeReport report;
    FindOptions current = options;
    for (int y = 1; y <= ydeg_cap; ++y) {
        current.max_ydeg = y;
        report.result = find_relation(target, current);
        report.bounds = bounds_text(current, power_series);
        if (!report.result.relations.empty()) {
            report.degree = report.result.relations.front().degree();
            report.relation = report.result.relations.front();
            return report;
        }
    }
    return report;
}

}  // namespace

ResidualReport verify_relation(const Relation& rel, const InvProvider& target, Depth precision) {
    // evaluation loses at most a bounded amount of precision, so a few doublings suffice
    Depth work = precision;
    for (int attempt = 0; attempt < 8; ++attempt) {
        const InvSeries residual = invseries::eval_relation_inv(rel, target(work));
        if (residual.precision() >= precision) {
            return residual_report(residual.truncated(precision));
        }
        work = 2 * work + (precision - residual.precision());
    }
    throw std::runtime_error("could not reach the requested residual precision");
}

ResidualReport verify_relation(const Relation& rel, const ZProvider& target, std::size_t precision) {
    return verify_relation(rel, target(precision));
}

FindResult find_relation(const InvProvider& target, const FindOptions& options) {
    return find_with_retries<InvSeries>(target, options, solve_inv, [](const InvSeries& s) {
        std::uint32_t mask = 0;
        for (const auto& t : s.terms()) {
            mask |= t.support();
        }
        return letters_of_mask(mask);
    });
}

FindResult find_relation(const ZProvider& target, const FindOptions& options) {
    auto z_provider = [&](Depth p) { return target(static_cast<std::size_t>(p)); };
    return find_with_retries<ZSeries>(z_provider, options, solve_z, [](const ZSeries& s) {
        std::uint32_t mask = 0;
        for (const auto& c : s.coeffs()) {
            mask |= c.support();
        }
        return letters_of_mask(mask);
    });
}

std::string bounds_text(const FindOptions& options, bool power_series) {
    std::string out = "ydeg <= " + std::to_string(options.max_ydeg) +
                      ", coeff deg <= " + std::to_string(options.coeff_deg_bound);
    if (power_series) {
        out += ", z deg <= " + std::to_string(options.z_deg_bound);
    }
    out += ", prec " + std::to_string(options.precision);
    return out;
}

DegreeReport minimal_degree_report(const InvProvider& target, int ydeg_cap, const FindOptions& options) {
    return degree_search(target, ydeg_cap, options, false);
}

DegreeReport minimal_degree_report(const ZProvider& target, int ydeg_cap, const FindOptions& options) {
    return degree_search(target, ydeg_cap, options, true);
}

}  // namespace autocf::cfalg
