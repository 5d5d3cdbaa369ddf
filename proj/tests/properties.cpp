#include "properties.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "autocf/cfalg.hpp"
#include "autocf/cli.hpp"
#include "autocf/finder.hpp"
#include "autocf/json_io.hpp"
#include "autocf/laurent.hpp"
#include "autocf/linalg.hpp"
#include "autocf/riccati.hpp"
#include "support.hpp"

namespace autocf::testing {

namespace {

using gf2poly::Gf2Poly;
using gf2poly::Monomial;
using gf2poly::UniPoly;
using invseries::Depth;
using invseries::InvSeries;
using seqcore::EpsSpec;
using zseries::ZSeries;

constexpr int kCases = 1000;

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    // Runs body once per case; an exception counts as a failure of that case.
    template <class Body>
    void run(int cases, std::uint64_t seed, Body body) {
        Rng rng(seed);
        for (int i = 0; i < cases; ++i) {
            ++result_.cases;
            failed_ = false;
            try {
                body(rng);
            } catch (const std::exception& e) {
                fail(std::string("exception: ") + e.what());
            }
            if (failed_) {
                ++result_.failures;
            }
        }
    }

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            fail(what);
        }
    }

    PropertyResult result() const { return result_; }

private:
    void fail(const std::string& what) {
        if (!failed_ && result_.first_failure.empty()) {
            result_.first_failure = what;
        }
        failed_ = true;
    }

    PropertyResult result_;
    bool failed_ = false;
};

std::string word_text(const seqcore::Word& w) {
    return seqcore::to_string(w);
}

// ---- seqcore

PropertyResult word_shape() {
    Checker c("build_word length, palindrome, prefix chain, oracle");
    c.run(kCases, 101, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 4, 4, 4);
        const int n = uniform(rng, 1, 11);
        const std::string w = word_text(seqcore::build_word(spec, n));
        const std::string next = word_text(seqcore::build_word(spec, n + 1));
        c.expect(w.size() == (std::size_t{1} << n) - 1, "length of W_n");
        c.expect(std::equal(w.begin(), w.end(), w.rbegin()), "W_n palindrome");
        c.expect(next.compare(0, w.size(), w) == 0, "W_n prefix of W_{n+1}");
        c.expect(w == word_oracle(spec, w.size()), "W_n vs recursion oracle for " + spec.to_string());
        c.expect(w[w.size() / 2] == spec.eps(n - 1).name, "centre letter");
    });
    return c.result();
}

PropertyResult letter_at_agrees() {
    Checker c("letter_at agrees with build_word");
    c.run(kCases, 102, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 4, 4, 5);
        const int n = uniform(rng, 1, 12);
        const std::string w = word_text(seqcore::build_word(spec, n));
        bool all = true;
        for (std::size_t i = 0; i < w.size(); ++i) {
            all = all && seqcore::letter_at(spec, i).name == w[i];
        }
        c.expect(all, "letter_at mismatch for " + spec.to_string());
        c.expect(word_text(seqcore::stream_prefix(spec, w.size())) == w, "stream_prefix");
    });
    return c.result();
}

PropertyResult positions_agree() {
    Checker c("positions_predicted equals enumeration (distinct letters)");
    c.run(kCases, 103, [&](Rng& rng) {
        const EpsSpec spec = random_distinct_spec(rng, 4, 4);
        const std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spec.period_length()) - 1));
        const std::uint64_t horizon = static_cast<std::uint64_t>(uniform(rng, 1, 1 << 14));
        const auto predicted = seqcore::positions_predicted(spec, j, horizon);
        const auto letter = spec.period()[j];
        c.expect(predicted == seqcore::positions(spec, letter, horizon), "vs positions() for " + spec.to_string());
        const std::string s = word_oracle(spec, horizon);
        std::vector<std::uint64_t> oracle;
        for (std::uint64_t k = 0; k < horizon; ++k) {
            if (s[k] == letter.name) {
                oracle.push_back(k);
            }
        }
        c.expect(predicted.indices == oracle, "vs word oracle for " + spec.to_string());
    });
    return c.result();
}

PropertyResult kernel_closed() {
    Checker c("kernel equals brute-force kernel and is closed");
    constexpr std::size_t kHorizon = 1024;
    c.run(kCases, 104, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 3);
        const auto kernel = seqcore::kernel(spec);
        std::set<std::string> mine;
        for (const auto& e : kernel) {
            mine.insert(kernel_element_prefix(spec, e, kHorizon));
        }
        c.expect(mine.size() == kernel.size(), "two kernel elements share a prefix");
        const auto oracle = kernel_prefixes_oracle(spec, kHorizon);
        c.expect(std::set<std::string>(oracle.begin(), oracle.end()) == mine,
                 "kernel differs from brute force for " + spec.to_string());
        for (const auto& e : kernel) {
            const std::string x = kernel_element_prefix(spec, e, 2 * kHorizon);
            for (std::size_t r = 0; r < 2; ++r) {
                std::string sub(kHorizon, '?');
                for (std::size_t n = 0; n < kHorizon; ++n) {
                    sub[n] = x[2 * n + r];
                }
                c.expect(mine.count(sub) == 1, "kernel not closed for " + spec.to_string());
            }
        }
    });
    return c.result();
}

// ---- gf2poly

PropertyResult ring_axioms() {
    Checker c("ring axioms, characteristic 2, Frobenius, product oracle");
    c.run(kCases, 201, [&](Rng& rng) {
        const Gf2Poly p = random_poly(rng, "abz", 6, 4);
        const Gf2Poly q = random_poly(rng, "abz", 6, 4);
        const Gf2Poly r = random_poly(rng, "abz", 6, 4);
        c.expect((p * q) * r == p * (q * r), "associativity");
        c.expect(p * q == q * p, "commutativity");
        c.expect(p * (q + r) == p * q + p * r, "distributivity");
        c.expect((p + p).is_zero(), "p + p = 0");
        c.expect((p + q).pow(2) == p.pow(2) + q.pow(2), "Frobenius");
        c.expect(p * q == multiply_oracle(p, q), "product oracle");
        c.expect(p.pow(3) == p * p * p, "pow");
        c.expect(p.pow2k(2) == p.pow(4), "pow2k");
    });
    return c.result();
}

PropertyResult derivative_rules() {
    Checker c("derivative linear and Leibniz");
    c.run(kCases, 202, [&](Rng& rng) {
        const Gf2Poly p = random_poly(rng, "abc", 6, 5);
        const Gf2Poly q = random_poly(rng, "abc", 6, 5);
        const auto v = gf2poly::var_of("abc"[uniform(rng, 0, 2)]);
        c.expect((p + q).derivative(v) == p.derivative(v) + q.derivative(v), "linearity");
        c.expect((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v), "Leibniz");
        c.expect(p.pow(2).derivative(v).is_zero(), "derivative of a square");
    });
    return c.result();
}

PropertyResult squares() {
    Checker c("is_square and sqrt");
    c.run(kCases, 203, [&](Rng& rng) {
        const Gf2Poly p = random_poly(rng, "abz", 6, 4);
        const Gf2Poly sq = p * p;
        c.expect(gf2poly::is_square(sq), "p^2 is a square");
        const auto root = sq.sqrt();
        c.expect(root.has_value() && *root == p, "sqrt(p^2) = p");
        // adding a monomial with an odd exponent breaks squareness
        Gf2Poly odd = sq + Gf2Poly::variable(gf2poly::var_of('a'), 2 * uniform(rng, 0, 4) + 1);
        c.expect(!gf2poly::is_square(odd), "odd exponent is not a square");
        const UniPoly u = random_unipoly(rng, 40);
        c.expect(u.square().sqrt() == std::optional<UniPoly>(u), "UniPoly sqrt");
    });
    return c.result();
}

PropertyResult print_parse() {
    Checker c("print/parse round trips");
    c.run(kCases, 204, [&](Rng& rng) {
        const Gf2Poly p = random_poly(rng, "abcz", 6, 5);
        const std::string text = gf2poly::to_string(p);
        c.expect(gf2poly::parse_poly(text) == p, "parse(print(p)) for " + text);
        c.expect(gf2poly::to_string(gf2poly::parse_poly(text)) == text, "print(parse(s)) for " + text);
        const UniPoly u = random_unipoly(rng, 70);
        c.expect(gf2poly::parse_unipoly(gf2poly::to_string(u, 'x'), 'x') == u, "UniPoly round trip");
    });
    return c.result();
}

Gf2Poly as_poly(const UniPoly& u) {
    std::vector<Monomial> terms;
    for (int i = 0; i <= u.degree(); ++i) {
        if (u.coeff(i)) {
            terms.push_back(Monomial::of(gf2poly::kVarT, i));
        }
    }
    return Gf2Poly::from_terms(std::move(terms));
}

PropertyResult unipoly_matches() {
    Checker c("UniPoly arithmetic agrees with Gf2Poly in t");
    c.run(kCases, 205, [&](Rng& rng) {
        const UniPoly x = random_unipoly(rng, uniform(rng, 0, 150));
        const UniPoly y = random_unipoly(rng, uniform(rng, 0, 150));
        c.expect(as_poly(x * y) == as_poly(x) * as_poly(y), "product");
        c.expect(as_poly(x + y) == as_poly(x) + as_poly(y), "sum");
        c.expect(as_poly(x.square()) == as_poly(x).pow(2), "square");
        c.expect(as_poly(x.derivative()) == as_poly(x).derivative(gf2poly::kVarT), "derivative");
        const int k = uniform(rng, 0, 100);
        c.expect(as_poly(x.shifted(k)) == as_poly(x) * Monomial::of(gf2poly::kVarT, k), "shift");
        std::array<std::optional<UniPoly>, gf2poly::kVarCount> values{};
        values[gf2poly::kVarT] = UniPoly::monomial(1);
        c.expect(gf2poly::specialize(as_poly(x), values) == x, "specialize t -> t");
    });
    return c.result();
}

// ---- invseries

InvSeries random_inv(Rng& rng, Depth precision, int min_depth = 1) {
    std::vector<Monomial> terms;
    const int count = uniform(rng, 0, 8);
    for (int i = 0; i < count; ++i) {
        Monomial m;
        const int depth = uniform(rng, min_depth, static_cast<int>(precision) + 2);
        for (int k = 0; k < depth; ++k) {
            const auto v = gf2poly::var_of("abc"[uniform(rng, 0, 2)]);
            m.set_exponent(v, m.exponent(v) - 1);
        }
        terms.push_back(m);
    }
    return InvSeries::from_terms(std::move(terms), precision);
}

PropertyResult ultrametric() {
    Checker c("depth norm is ultrametric");
    c.run(kCases, 301, [&](Rng& rng) {
        const InvSeries x = random_inv(rng, uniform(rng, 4, 20));
        const InvSeries y = random_inv(rng, uniform(rng, 4, 20));
        const Depth dx = invseries::depth_norm(x);
        const Depth dy = invseries::depth_norm(y);
        const Depth ds = invseries::depth_norm(x + y);
        c.expect(ds >= std::min(dx, dy), "depth_norm(x + y) >= min");
        if (dx != dy && std::min(dx, dy) < (x + y).precision()) {
            c.expect(ds == std::min(dx, dy), "equality for different depths");
        }
        c.expect((x + y).precision() == std::min(x.precision(), y.precision()), "sum precision");
    });
    return c.result();
}

PropertyResult inverse_identity() {
    Checker c("x * inverse(x) = 1 up to precision");
    c.run(kCases, 302, [&](Rng& rng) {
        const Depth p = uniform(rng, 6, 24);
        // a unique shallowest term followed by strictly deeper ones
        Monomial lead;
        const int lead_depth = uniform(rng, 0, 3);
        for (int k = 0; k < lead_depth; ++k) {
            const auto v = gf2poly::var_of("abc"[uniform(rng, 0, 2)]);
            lead.set_exponent(v, lead.exponent(v) - 1);
        }
        const InvSeries x = InvSeries::monomial(lead) + random_inv(rng, p, lead_depth + 1);
        const InvSeries inv = invseries::inverse(x);
        const InvSeries prod = x * inv;
        c.expect(prod.precision() >= p - 2 * lead_depth, "product precision");
        c.expect((prod + InvSeries::one()).is_zero(), "x * 1/x = 1 at " + invseries::to_string(x));
    });
    return c.result();
}

PropertyResult precision_monotone() {
    Checker c("higher precision never changes reported terms");
    c.run(kCases, 303, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 4);
        const Depth p = uniform(rng, 8, 48);
        c.expect(cfalg::compute_G(spec, 2 * p).truncated(p) == cfalg::compute_G(spec, p), "G for " + spec.to_string());
        const InvSeries cf_lo = cfalg::compute_cf(spec, p);
        c.expect(cfalg::compute_cf(spec, 2 * p).truncated(cf_lo.precision()) == cf_lo, "CF for " + spec.to_string());
        const InvSeries x = InvSeries::one() + random_inv(rng, 2 * p);
        const InvSeries coarse = invseries::inverse(x.truncated(p));
        c.expect(invseries::inverse(x).truncated(coarse.precision()) == coarse, "inverse");
    });
    return c.result();
}

PropertyResult inv_frobenius() {
    Checker c("(x + y)^2 = x^2 + y^2");
    c.run(kCases, 304, [&](Rng& rng) {
        const InvSeries x = random_inv(rng, uniform(rng, 4, 20));
        const InvSeries y = random_inv(rng, uniform(rng, 4, 20));
        c.expect((x + y).square() == x.square() + y.square(), "Frobenius");
        c.expect(x.square().precision() >= (x * x).precision(), "square precision");
        c.expect(x.square().truncated((x * x).precision()) == (x * x), "square vs product");
    });
    return c.result();
}

// ---- zseries

PropertyResult cartier_reconstruction() {
    Checker c("s = sum z^r (Lambda_r s)^2");
    c.run(kCases, 401, [&](Rng& rng) {
        const std::size_t p = static_cast<std::size_t>(uniform(rng, 1, 200));
        std::vector<std::uint64_t> support;
        for (std::size_t k = 0; k < p; ++k) {
            if (uniform(rng, 0, 1) == 1) {
                support.push_back(k);
            }
        }
        const ZSeries s = ZSeries::indicator(support, p);
        const ZSeries l0 = zseries::cartier_z(s, 0);
        const ZSeries l1 = zseries::cartier_z(s, 1);
        const ZSeries rebuilt = l0.square() + l1.square().shifted(1);
        const std::size_t known = std::min(rebuilt.precision(), p);
        c.expect(known + 2 >= p, "reconstruction loses at most two coefficients");
        c.expect(rebuilt.truncated(known) == s.truncated(known), "reconstruction");
    });
    return c.result();
}

PropertyResult series_from_words() {
    Checker c("F and the slot indicators agree with the word oracle");
    c.run(kCases, 402, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 4);
        const std::size_t p = static_cast<std::size_t>(uniform(rng, 1, 300));
        const std::string s = word_oracle(spec, p);
        const ZSeries f = zseries::compute_F(spec, p);
        bool all = f.precision() == p;
        for (std::size_t k = 0; k < p && all; ++k) {
            all = f.coeff(k) == Gf2Poly::variable(gf2poly::var_of(s[k]));
        }
        c.expect(all, "F coefficients for " + spec.to_string());
        // slot n of the relabeled seed: positions carrying the n-th period letter of eps'
        const EpsSpec distinct = seqcore::relabel_distinct(spec);
        const std::string s2 = word_oracle(distinct, p);
        const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(spec.period_length()) - 1));
        std::vector<std::uint64_t> where;
        for (std::size_t k = 0; k < p; ++k) {
            if (s2[k] == distinct.period()[n].name) {
                where.push_back(k);
            }
        }
        c.expect(zseries::compute_Fn(spec, n, p) == ZSeries::indicator(where, p), "F_n for " + spec.to_string());
    });
    return c.result();
}

PropertyResult power_series_equations() {
    Checker c("power-series functional equations vanish");
    c.run(kCases, 403, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 5);
        for (const auto& check : cfalg::power_series_identities(spec, 64)) {
            c.expect(check.report.vanished && check.report.precision >= 64,
                     check.name + " for " + spec.to_string());
        }
    });
    return c.result();
}

// ---- cfalg

PropertyResult continuant_shapes() {
    Checker c("u_n monomial, v recursion, v_n/u_n partial sums");
    c.run(kCases, 501, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 4);
        const int n = uniform(rng, 1, 12);
        const auto pair = cfalg::continuants(spec, n);
        c.expect(pair.u == Gf2Poly::monomial(cfalg::u_monomial(spec, n)), "u_n monomial for " + spec.to_string());
        const auto next = cfalg::continuants(spec, n + 1);
        const Gf2Poly e = Gf2Poly::variable(gf2poly::var_of(spec.eps(static_cast<std::uint64_t>(n)).name));
        c.expect(next.u == e * pair.u * pair.u, "u recursion");
        c.expect(next.v == e * pair.u * pair.v + Gf2Poly::one(), "v recursion");
        InvSeries partial;
        for (int k = 1; k <= n; ++k) {
            partial += InvSeries::inverse_of(cfalg::u_monomial(spec, k));
        }
        const InvSeries ratio = InvSeries::from_poly(pair.v) * InvSeries::inverse_of(cfalg::u_monomial(spec, n));
        c.expect(ratio == partial, "v_n / u_n = sum 1/u_k");
    });
    return c.result();
}

PropertyResult continuant_collapse() {
    Checker c("general continuant of W_n equals (u_n, v_n)");
    c.run(kCases, 502, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 4);
        const int n = uniform(rng, 1, 6);
        std::vector<Gf2Poly> quotients;
        for (const auto& letter : seqcore::build_word(spec, n)) {
            quotients.push_back(Gf2Poly::variable(gf2poly::var_of(letter.name)));
        }
        const auto [p, q] = cfalg::general_continuant(quotients);
        const auto pair = cfalg::continuants(spec, n);
        c.expect(p == pair.u && q == pair.v, "collapse for " + spec.to_string());
    });
    return c.result();
}

PropertyResult cross_identity() {
    Checker c("P_{n-1} Q_{n-2} + P_{n-2} Q_{n-1} = 1");
    c.run(kCases, 503, [&](Rng& rng) {
        const int m = uniform(rng, 1, 8);
        std::vector<Gf2Poly> quotients;
        for (int i = 0; i < m; ++i) {
            quotients.push_back(random_poly(rng, "ab", 3, 2));
        }
        for (int n = 1; n <= m; ++n) {
            const std::vector<Gf2Poly> a(quotients.begin(), quotients.begin() + n);
            const std::vector<Gf2Poly> b(quotients.begin(), quotients.begin() + n - 1);
            const auto [p1, q1] = cfalg::general_continuant(a);
            const auto [p2, q2] = cfalg::general_continuant(b);
            c.expect(p1 * q2 + p2 * q1 == Gf2Poly::one(), "cross identity");
        }
    });
    return c.result();
}

PropertyResult series_equations() {
    Checker c("continued-fraction series identities vanish");
    c.run(kCases, 504, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 4, 5);
        for (const auto& check : cfalg::series_identities(spec, 64)) {
            c.expect(check.report.vanished && check.report.precision >= 64,
                     check.name + " for " + spec.to_string());
        }
    });
    return c.result();
}

PropertyResult cartier_degree() {
    Checker c("Cartier does not raise the degree (period-doubling F)");
    const EpsSpec spec = EpsSpec::parse("(ab)");
    cfalg::FindOptions options;
    options.coeff_deg_bound = 3;
    options.z_deg_bound = 8;
    const auto base = cfalg::minimal_degree_report(
        cfalg::ZProvider([&](std::size_t p) { return zseries::compute_F(spec, p); }), 4, options);
    int which = 0;
    c.run(2, 505, [&](Rng&) {
        const auto rep = cfalg::minimal_degree_report(
            cfalg::ZProvider([&](std::size_t p) { return zseries::cartier_z(zseries::compute_F(spec, 2 * p + 2), which); }),
            4, options);
        c.expect(base.degree.has_value() && rep.degree.has_value() && *rep.degree <= *base.degree,
                 "degree after Lambda_" + std::to_string(which));
        ++which;
    });
    return c.result();
}

PropertyResult finder_reverifies() {
    Checker c("found relations hold at four times the precision");
    c.run(60, 506, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 2, 2, 2);
        cfalg::FindOptions options;
        options.max_ydeg = uniform(rng, 2, 4);
        options.coeff_deg_bound = uniform(rng, 1, 4);
        options.precision = 128;
        const cfalg::InvProvider target = [&](Depth p) { return cfalg::compute_G(spec, p); };
        const auto found = cfalg::find_relation(target, options);
        for (const auto& rel : found.relations) {
            const auto report = cfalg::verify_relation(rel, target(4 * found.precision));
            c.expect(report.vanished, "spurious G relation for " + spec.to_string());
            c.expect(rel.content().is_one(), "relation keeps monomial content");
        }
        cfalg::FindOptions zopt;
        zopt.max_ydeg = 2;
        zopt.coeff_deg_bound = 2;
        zopt.z_deg_bound = uniform(rng, 2, 6);
        zopt.precision = 96;
        const cfalg::ZProvider ztarget = [&](std::size_t p) { return zseries::compute_F(spec, p); };
        const auto zfound = cfalg::find_relation(ztarget, zopt);
        for (const auto& rel : zfound.relations) {
            const auto report = cfalg::verify_relation(rel, ztarget(4 * static_cast<std::size_t>(zfound.precision)));
            c.expect(report.vanished, "spurious F relation for " + spec.to_string());
        }
    });
    return c.result();
}

// ---- laurent

cfalg::LaurentSeries random_laurent(Rng& rng, std::int64_t precision) {
    const std::int64_t low = uniform(rng, -6, 6);
    const int width = static_cast<int>(std::max<std::int64_t>(0, precision - low - 1));
    UniPoly bits = random_unipoly(rng, width);
    bits.set_coeff(0, true);
    return cfalg::LaurentSeries::from_bits(low, bits, precision).truncated(precision);
}

PropertyResult laurent_inverse() {
    Checker c("Laurent s * inverse(s) = 1");
    c.run(kCases, 601, [&](Rng& rng) {
        const std::int64_t p = uniform(rng, 8, 160);
        const auto s = random_laurent(rng, p);
        if (s.valuation() >= p) {
            return;
        }
        const auto inv = cfalg::inverse(s);
        c.expect(inv.precision() == p - 2 * s.valuation(), "inverse precision");
        const auto prod = s * inv;
        c.expect((prod + cfalg::LaurentSeries::one()).is_zero(), "s * 1/s = 1");
        c.expect(prod.precision() >= p - s.valuation(), "product precision");
    });
    return c.result();
}

PropertyResult cf_round_trip() {
    Checker c("cf_expand recovers the quotients of cf_value");
    c.run(kCases, 602, [&](Rng& rng) {
        const int k = uniform(rng, 1, 12);
        std::vector<UniPoly> head{random_unipoly(rng, 3)};
        std::int64_t total = 0;
        for (int i = 0; i < k; ++i) {
            const int deg = uniform(rng, 1, 5);
            head.push_back(random_unipoly_exact(rng, deg));
            total += deg;
        }
        const auto value = cfalg::cf_value(head, {}, 2 * total + 2);
        const auto expansion = cfalg::cf_expand(value, head.size() + 4);
        c.expect(expansion.quotients.size() >= head.size(), "too few quotients");
        c.expect(std::equal(head.begin(), head.end(), expansion.quotients.begin(),
                            expansion.quotients.begin() + std::min(head.size(), expansion.quotients.size())),
                 "quotients differ");
    });
    return c.result();
}

// ---- riccati

riccati::QuotientSeq random_pattern(Rng& rng, int max_len) {
    for (;;) {
        const UniPoly a = random_unipoly_exact(rng, uniform(rng, 1, 4));
        const UniPoly b = random_unipoly_exact(rng, uniform(rng, 1, 4));
        if (a == b) {
            continue;
        }
        const bool c_allowed = !(a + b).is_constant();
        const int len = uniform(rng, 1, max_len);
        std::string pattern;
        for (int i = 0; i < len; ++i) {
            pattern += "abc"[uniform(rng, 0, c_allowed ? 2 : 1)];
        }
        return riccati::QuotientSeq::parse(pattern, a, b);
    }
}

UniPoly fn_oracle(const riccati::QuotientSeq& q, int n) {
    const auto [p, qq] = riccati::convergents_uni(q, n);
    const UniPoly ab = q.a() * q.b();
    return ab * (q.a() + q.b()) * p * qq + ab * (p.square() + qq.square());
}

PropertyResult riccati_witness() {
    Checker c("F_n = ab + g_n^2 for every n");
    c.run(kCases, 701, [&](Rng& rng) {
        const auto q = random_pattern(rng, 30);
        const UniPoly ab = q.a() * q.b();
        for (int n = -1; n < static_cast<int>(q.size()); ++n) {
            const auto w = riccati::fn_witness(q, n);
            c.expect(w.f == fn_oracle(q, n), "f differs from the definition");
            c.expect(w.f == ab + w.g.square(), "f = ab + g^2");
        }
    });
    return c.result();
}

PropertyResult riccati_induction() {
    Checker c("F_n = u_n^2 F_{n-1} + F_{n-2} + u_n ab(a+b) and the case split");
    c.run(kCases, 702, [&](Rng& rng) {
        const auto q = random_pattern(rng, 30);
        const UniPoly ab = q.a() * q.b();
        const UniPoly abc = ab * (q.a() + q.b());
        for (int n = 1; n < static_cast<int>(q.size()); ++n) {
            const UniPoly u = q.quotient(static_cast<std::size_t>(n));
            c.expect(fn_oracle(q, n) == u.square() * fn_oracle(q, n - 1) + fn_oracle(q, n - 2) + u * abc,
                     "induction step at n = " + std::to_string(n));
        }
        const UniPoly a = q.a();
        const UniPoly b = q.b();
        c.expect(a * abc == ab.square() + a.square() * ab, "case u = a");
        c.expect(b * abc == ab.square() + b.square() * ab, "case u = b");
        c.expect((a + b) * abc == (a + b).square() * ab, "case u = a + b");
    });
    return c.result();
}

PropertyResult riccati_residuals() {
    Checker c("Riccati residual is (a'b + ab') / Q_n^2 with growing valuation");
    c.run(kCases, 703, [&](Rng& rng) {
        const auto q = random_pattern(rng, 30);
        const UniPoly closed = q.a().derivative() * q.b() + q.a() * q.b().derivative();
        int min_deg = 1 << 20;
        for (std::size_t i = 0; i < q.size(); ++i) {
            min_deg = std::min(min_deg, q.quotient(i).degree());
        }
        std::int64_t previous = -(std::int64_t{1} << 40);
        for (int n = 0; n < static_cast<int>(q.size()); ++n) {
            const auto res = riccati::riccati_residual(q, n);
            const auto [p, qq] = riccati::convergents_uni(q, n);
            c.expect(res.numerator == closed && res.matches_closed_form, "numerator");
            c.expect(res.denominator == qq.square(), "denominator");
            if (closed.is_zero()) {
                c.expect(res.valuation == invseries::kInfinite, "vanishing residual");
                continue;
            }
            c.expect(res.valuation == 2 * qq.degree() - closed.degree(), "valuation");
            c.expect(res.valuation >= 2 * n * min_deg - closed.degree(), "valuation bound");
            c.expect(res.valuation > previous, "valuation grows");
            previous = res.valuation;
        }
    });
    return c.result();
}

PropertyResult baum_sweet_forms() {
    Checker c("Baum-Sweet forms agree");
    const UniPoly t = UniPoly::monomial(1);
    const UniPoly t1 = t + UniPoly::one();
    c.run(kCases, 704, [&](Rng& rng) {
        std::vector<UniPoly> head{UniPoly()};
        const int k = uniform(rng, 1, 6);
        for (int i = 0; i < k; ++i) {
            head.push_back(uniform(rng, 0, 1) ? t : t1);
        }
        const bool spoil = uniform(rng, 0, 1) == 1;
        if (spoil) {
            head[static_cast<std::size_t>(uniform(rng, 1, k))] = random_unipoly_exact(rng, uniform(rng, 2, 3));
        }
        std::vector<UniPoly> tail;
        const int period = uniform(rng, 1, 3);
        for (int i = 0; i < period; ++i) {
            tail.push_back(uniform(rng, 0, 1) ? t : t1);
        }
        const auto alpha = cfalg::cf_value(head, tail, 160);
        const auto rep = riccati::baum_sweet_check(alpha, 128);
        c.expect(rep.residual_vanishes == !spoil, "differential form");
        c.expect(rep.square_form_holds == rep.residual_vanishes, "forms disagree");
    });
    return c.result();
}

// ---- linalg

PropertyResult nullspace_brute_force() {
    Checker c("nullspace against enumeration");
    c.run(kCases, 801, [&](Rng& rng) {
        const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 10));
        const int rows = uniform(rng, 0, 12);
        linalg::EchelonBasis basis(cols);
        std::vector<std::uint32_t> matrix;
        for (int r = 0; r < rows; ++r) {
            linalg::BitVec row(cols);
            std::uint32_t mask = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (uniform(rng, 0, 2) == 0) {
                    row.set(j);
                    mask |= 1u << j;
                }
            }
            basis.insert(row);
            matrix.push_back(mask);
        }
        std::size_t kernel_size = 0;
        for (std::uint32_t x = 0; x < (1u << cols); ++x) {
            bool zero = true;
            for (auto m : matrix) {
                zero = zero && (std::popcount(m & x) % 2 == 0);
            }
            kernel_size += zero ? 1 : 0;
        }
        const auto null = basis.nullspace();
        c.expect((std::size_t{1} << null.size()) == kernel_size, "nullity");
        c.expect(basis.rank() + null.size() == cols, "rank + nullity");
        std::set<std::size_t> tops;
        for (const auto& v : null) {
            std::uint32_t x = 0;
            for (auto i : v.ones()) {
                x |= 1u << i;
            }
            bool zero = true;
            for (auto m : matrix) {
                zero = zero && (std::popcount(m & x) % 2 == 0);
            }
            c.expect(zero && !v.is_zero(), "vector not in the kernel");
            tops.insert(v.highest());
        }
        c.expect(tops.size() == null.size(), "leading columns repeat");
        for (const auto& v : null) {
            for (auto top : tops) {
                c.expect(top == v.highest() || !v.test(top), "not reduced");
            }
        }
    });
    return c.result();
}

// ---- io

PropertyResult json_round_trips() {
    Checker c("JSON round trips");
    c.run(kCases, 901, [&](Rng& rng) {
        const Gf2Poly p = random_poly(rng, "abz", 6, 4);
        c.expect(io::poly_from_json(io::to_json(p)) == p, "poly");
        const InvSeries s = random_inv(rng, uniform(rng, 2, 20)) + (uniform(rng, 0, 1) ? InvSeries::one() : InvSeries());
        c.expect(io::invseries_from_json(io::to_json(s)) == s, "invseries");
        const InvSeries exact = InvSeries::from_poly(p);
        c.expect(io::invseries_from_json(io::to_json(exact)) == exact, "exact invseries");
        std::vector<Gf2Poly> coeffs;
        for (int i = uniform(rng, 0, 6); i > 0; --i) {
            coeffs.push_back(random_poly(rng, "ab", 3, 2));
        }
        const ZSeries z = ZSeries::from_coeffs(coeffs);
        c.expect(io::zseries_from_json(io::to_json(z)) == z, "zseries");
        std::map<int, Gf2Poly> rc;
        for (int j = 0; j < 4; ++j) {
            rc[j] = random_poly(rng, "abz", 3, 3);
        }
        const cfalg::Relation rel(rc);
        c.expect(io::relation_from_json(io::to_json(rel)) == rel, "relation");
        c.expect(io::relation_from_json(nlohmann::json::parse(io::to_json(rel).dump())) == rel, "relation via text");
        cfalg::ResidualReport report;
        report.vanished = uniform(rng, 0, 1) == 1;
        report.residual_depth = report.vanished ? invseries::kInfinite : uniform(rng, 0, 100);
        report.precision = uniform(rng, 0, 1) ? invseries::kInfinite : uniform(rng, 1, 100);
        const auto back = io::report_from_json(io::to_json(report));
        c.expect(back.vanished == report.vanished && back.residual_depth == report.residual_depth &&
                     back.precision == report.precision,
                 "report");
        const auto l = random_laurent(rng, uniform(rng, 1, 100));
        c.expect(io::laurent_from_json(io::to_json(l)) == l, "laurent");
    });
    return c.result();
}

PropertyResult cli_deterministic() {
    Checker c("CLI output deterministic and JSON-decodable");
    c.run(100, 902, [&](Rng& rng) {
        const EpsSpec spec = random_spec(rng, 3, 3, 3);
        const std::string eps = spec.to_string();
        const std::string p = std::to_string(uniform(rng, 1, 40));
        auto invoke = [&](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int rc = cli::run(args, out, err);
            c.expect(rc == cli::kOk, "exit code for " + args[0] + " " + args[1] + ": " + err.str());
            return out.str();
        };
        const std::vector<std::string> ps{"ps", "series", "--eps", eps, "--prec", p, "--json"};
        const std::string first = invoke(ps);
        c.expect(first == invoke(ps), "ps series not deterministic");
        c.expect(io::zseries_from_json(nlohmann::json::parse(first)) == zseries::compute_F(spec, std::stoul(p)),
                 "ps series JSON");
        const std::vector<std::string> cf{"cf", "series", "--eps", eps, "--target", "G", "--prec", p, "--json"};
        const std::string g = invoke(cf);
        c.expect(g == invoke(cf), "cf series not deterministic");
        c.expect(io::invseries_from_json(nlohmann::json::parse(g)) == cfalg::compute_G(spec, std::stol(p)),
                 "cf series JSON");
        const std::string prefix = invoke({"seq", "prefix", "--eps", eps, "--len", p});
        c.expect(prefix == word_oracle(spec, std::stoul(p)) + "\n", "seq prefix");
    });
    return c.result();
}

std::vector<PropertySuite> build_suites() {
    return {
        {"seqcore", "word_shape", word_shape},
        {"seqcore", "letter_at", letter_at_agrees},
        {"seqcore", "positions", positions_agree},
        {"seqcore", "kernel", kernel_closed},
        {"gf2poly", "ring_axioms", ring_axioms},
        {"gf2poly", "derivative", derivative_rules},
        {"gf2poly", "squares", squares},
        {"gf2poly", "print_parse", print_parse},
        {"gf2poly", "unipoly", unipoly_matches},
        {"invseries", "ultrametric", ultrametric},
        {"invseries", "inverse", inverse_identity},
        {"invseries", "precision_monotone", precision_monotone},
        {"invseries", "frobenius", inv_frobenius},
        {"zseries", "cartier", cartier_reconstruction},
        {"zseries", "words", series_from_words},
        {"zseries", "equations", power_series_equations},
        {"cfalg", "continuants", continuant_shapes},
        {"cfalg", "collapse", continuant_collapse},
        {"cfalg", "cross_identity", cross_identity},
        {"cfalg", "equations", series_equations},
        {"cfalg", "cartier_degree", cartier_degree},
        {"cfalg", "finder", finder_reverifies},
        {"cfalg", "laurent_inverse", laurent_inverse},
        {"cfalg", "cf_round_trip", cf_round_trip},
        {"riccati", "witness", riccati_witness},
        {"riccati", "induction", riccati_induction},
        {"riccati", "residual", riccati_residuals},
        {"riccati", "baum_sweet", baum_sweet_forms},
        {"linalg", "nullspace", nullspace_brute_force},
        {"io", "json", json_round_trips},
        {"cli", "deterministic", cli_deterministic},
    };
}

}  // namespace

const std::vector<PropertySuite>& property_suites() {
    static const std::vector<PropertySuite> suites = build_suites();
    return suites;
}

std::vector<PropertySuite> property_suites(const std::string& module) {
    std::vector<PropertySuite> out;
    for (const auto& s : property_suites()) {
        if (s.module == module) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace autocf::testing
