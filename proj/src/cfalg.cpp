#include "autocf/cfalg.hpp"

#include <stdexcept>

namespace autocf::cfalg {

using gf2poly::Monomial;
using invseries::kInfinite;

namespace {

gf2poly::Var var_of(seqcore::Letter c) {
    return gf2poly::var_of(c.name);
}

Gf2Poly letter_poly(seqcore::Letter c) {
    return Gf2Poly::variable(var_of(c));
}

// Largest n with 2^n - 1 < precision, capped so exponents stay in range.
int last_index_below(Depth precision) {
    int n = 0;
    while (n < 40 && (Depth{1} << (n + 1)) - 1 < precision) {
        ++n;
    }
    return n;
}

}  // namespace

ContinuantPair continuants(const EpsSpec& spec, int n) {
    if (n < 1) {
        throw std::invalid_argument("continuant index must be >= 1");
    }
    ContinuantPair pair{letter_poly(spec.eps(0)), Gf2Poly::one(), 1};
    while (pair.n < n) {
        const Gf2Poly eps = letter_poly(spec.eps(static_cast<std::uint64_t>(pair.n)));
        const Gf2Poly eu = eps * pair.u;
        pair.v = eu * pair.v + Gf2Poly::one();
        pair.u = eu * pair.u;
        ++pair.n;
    }
    return pair;
}

Monomial u_monomial(const EpsSpec& spec, int n) {
    if (n < 0) {
        throw std::invalid_argument("continuant index must be >= 0");
    }
    if (n > 30) {
        throw std::out_of_range("u_n exponents overflow beyond n = 30");
    }
    Monomial u;
    for (int k = 0; k < n; ++k) {
        u = u.frobenius(1) * Monomial::of(var_of(spec.eps(static_cast<std::uint64_t>(k))));
    }
    return u;
}

std::pair<Gf2Poly, Gf2Poly> general_continuant(const std::vector<Gf2Poly>& quotients) {
    Gf2Poly p_prev;  // P_{-2} = 0 makes P_0 = q_0 * 1 + 0
    Gf2Poly q_prev = Gf2Poly::one();
    Gf2Poly p = Gf2Poly::one();
    Gf2Poly q;
    for (const auto& u : quotients) {
        Gf2Poly p_next = u * p + p_prev;
        Gf2Poly q_next = u * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
    }
    return {p, q};
}

namespace {

InvSeries inverse_u_sum(const EpsSpec& spec, int first, int step, Depth precision) {
    std::vector<Monomial> terms;
    const int last = last_index_below(precision);
    for (int n = first; n <= last; n += step) {
        terms.push_back(u_monomial(spec, n).inverse());
    }
    return InvSeries::from_terms(std::move(terms), precision);
}

}  // namespace

InvSeries compute_inv_cf(const EpsSpec& spec, Depth precision) {
    return inverse_u_sum(spec, 1, 1, precision);
}

InvSeries compute_cf(const EpsSpec& spec, Depth precision) {
    // 1/CF has a single letter at depth 1, so inversion costs two units of precision
    return invseries::inverse(compute_inv_cf(spec, precision + 2), precision);
}

InvSeries compute_G(const EpsSpec& spec, Depth precision) {
    return inverse_u_sum(spec, static_cast<int>(spec.preperiod_length()) + 1, 1, precision);
}

InvSeries compute_Gn(const EpsSpec& spec, int n, Depth precision) {
    const int d = static_cast<int>(spec.period_length());
    if (n < 0 || n >= d) {
        throw std::out_of_range("G_n index must lie in [0, d)");
    }
    return inverse_u_sum(spec, static_cast<int>(spec.preperiod_length()) + n, d, precision);
}

ResidualReport residual_report(const InvSeries& residual) {
    return {residual.is_zero(), invseries::depth_norm(residual), residual.precision()};
}

ResidualReport residual_report(const ZSeries& residual) {
    const auto order = residual.order();
    return {residual.is_zero(),
            residual.is_zero() ? kInfinite : static_cast<Depth>(order),
            static_cast<Depth>(residual.precision())};
}

ResidualReport verify_relation(const Relation& rel, const InvSeries& target) {
    return residual_report(invseries::eval_relation_inv(rel, target));
}

ResidualReport verify_relation(const Relation& rel, const ZSeries& target) {
    return residual_report(zseries::eval_relation_z(rel, target));
}

std::vector<IdentityCheck> series_identities(const EpsSpec& spec, Depth precision) {
    const int l = static_cast<int>(spec.preperiod_length());
    const int d = static_cast<int>(spec.period_length());
    auto e = [&](int n) { return var_of(spec.period()[static_cast<std::size_t>(n)]); };
    // Generous working precision; every identity is truncated back to `precision`.
    const Depth work = 2 * precision + 8;

    const InvSeries g = compute_G(spec, work);
    std::vector<InvSeries> gn;
    for (int n = 0; n < d; ++n) {
        gn.push_back(compute_Gn(spec, n, work));
    }
    const InvSeries inv_ul = InvSeries::inverse_of(u_monomial(spec, l));

    std::vector<IdentityCheck> out;
    auto add = [&](std::string name, const InvSeries& residual) {
        out.push_back({std::move(name), residual_report(residual.truncated(precision))});
    };

    {
        InvSeries r = g;
        for (int n = 0; n < d; ++n) {
            r += gn[static_cast<std::size_t>(n)].square() * Monomial::of(e(n), -1);
        }
        add("G = sum G_n^2 / e_n", r);
    }
    for (int n = 1; n < d; ++n) {
        add("G_" + std::to_string(n) + " = G_" + std::to_string(n - 1) + "^2 / e_" +
                std::to_string(n - 1),
            gn[static_cast<std::size_t>(n)] +
                gn[static_cast<std::size_t>(n - 1)].square() * Monomial::of(e(n - 1), -1));
    }
    add("G_0 = 1/u_l + G_{d-1}^2 / e_{d-1}",
        gn[0] + inv_ul + gn[static_cast<std::size_t>(d - 1)].square() * Monomial::of(e(d - 1), -1));
    {
        // E = e_{d-1} e_{d-2}^2 ... e_0^(2^(d-1))
        Monomial big_e;
        for (int n = 0; n < d; ++n) {
            big_e = big_e.frobenius(1) * Monomial::of(e(n));
        }
        add("G_0 = 1/u_l + G_0^(2^d) / E", gn[0] + inv_ul + gn[0].pow2k(d) * big_e.inverse());
    }
    {
        // G = 1/u_l + G_0 + G_0^2/e_0 + G_0^4/(e_0^2 e_1) + ...
        InvSeries r = g + inv_ul;
        Monomial denom;
        for (int n = 0; n < d; ++n) {
            r += gn[0].pow2k(n) * denom.inverse();
            denom = denom.frobenius(1) * Monomial::of(e(n));
        }
        add("G = 1/u_l + sum_n G_0^(2^n) / (e_0^(2^(n-1)) ... e_(n-1))", r);
    }
    {
        InvSeries r = compute_inv_cf(spec, work) + g;
        for (int n = 1; n <= l; ++n) {
            r += InvSeries::inverse_of(u_monomial(spec, n));
        }
        add("1/CF = sum_{n <= l} 1/u_n + G", r);
    }
    {
        const InvSeries cf = compute_cf(spec, work);
        InvSeries r = cf * compute_inv_cf(spec, work);
        r += InvSeries::one();
        add("CF * (1/CF) = 1", r);
    }
    return out;
}

std::vector<IdentityCheck> power_series_identities(const EpsSpec& spec, std::size_t precision) {
    const std::size_t l = spec.preperiod_length();
    const std::size_t d = spec.period_length();
    const std::size_t p = precision;
    auto e = [&](std::size_t n) { return letter_poly(spec.period()[n]); };
    auto z_power = [&](std::size_t k) {
        return ZSeries::from_poly(Gf2Poly::variable(gf2poly::kVarZ, static_cast<int>(k)), p);
    };
    const std::size_t two_l = l >= 62 ? p + 1 : std::size_t{1} << l;

    const ZSeries f_series = zseries::compute_F(spec, p);
    const ZSeries r_series = zseries::compute_R(spec, p);
    std::vector<ZSeries> fn;
    for (std::size_t n = 0; n < d; ++n) {
        fn.push_back(zseries::compute_Fn(spec, n, p));
    }
    // z^(2^l - 1) / (1 + z^(2^l))
    const ZSeries tail_indicator = zseries::geometric(two_l, p).shifted(two_l - 1);

    std::vector<IdentityCheck> out;
    auto add = [&](std::string name, const ZSeries& residual) {
        out.push_back({std::move(name), residual_report(residual)});
    };

    {
        ZSeries r = f_series + r_series;
        for (std::size_t n = 0; n < d; ++n) {
            r += fn[n] * e(n);
        }
        add("F = R + sum e_n F_n", r);
    }
    for (std::size_t n = 1; n < d; ++n) {
        add("F_" + std::to_string(n) + " = z F_" + std::to_string(n - 1) + "^2",
            fn[n] + fn[n - 1].square().shifted(1));
    }
    {
        // supports of R and F_0..F_{d-1} partition N
        ZSeries r = fn[0] + zseries::geometric(1, p);
        ZSeries head(p);
        for (std::size_t k = 0; k + 2 <= two_l && k < p; ++k) {
            head.set_coeff(k, Gf2Poly::one());
        }
        r += head * zseries::geometric(two_l, p);
        for (std::size_t n = 1; n < d; ++n) {
            r += fn[n];
        }
        add("F_0 = 1/(1+z) - sum_{k<2^l-1} z^k/(1+z^(2^l)) - sum_{n>=1} F_n", r);
    }
    {
        ZSeries r = fn[0] + tail_indicator;
        for (std::size_t n = 1; n < d; ++n) {
            r += fn[0].pow2k(static_cast<int>(n)).shifted((std::size_t{1} << n) - 1);
        }
        add("F_0 = z^(2^l-1)/(1+z^(2^l)) - sum_{n>=1} z^(2^n-1) F_0^(2^n)", r);
    }
    {
        ZSeries r = f_series + r_series;
        for (std::size_t n = 0; n < d; ++n) {
            r += fn[0].pow2k(static_cast<int>(n)).shifted((std::size_t{1} << n) - 1) * e(n);
        }
        add("F = R + sum e_n z^(2^n-1) F_0^(2^n)", r);
    }
    const ZSeries f = zseries::compute_f(d, p);
    {
        const ZSeries h = f.shifted(1);
        ZSeries sum(p);
        for (std::size_t n = 0; n < d; ++n) {
            sum += h.pow2k(static_cast<int>(n));
        }
        ZSeries r = sum + sum.shifted(1);
        r += z_power(1);
        add("(1+z) sum h^(2^n) + z = 0, h = z f", r);
    }
    {
        const int k = static_cast<int>(l);
        add("F_0 = z^(2^l-1) f^(2^l)", fn[0] + f.pow2k(k).shifted(two_l - 1));
    }
    return out;
}

}  // namespace autocf::cfalg
