#include "autocf/riccati.hpp"

#include <stdexcept>

#include "autocf/errors.hpp"

namespace autocf::riccati {

using cfalg::LaurentSeries;
using invseries::kInfinite;

QuotientSeq::QuotientSeq(std::vector<Tag> pattern, UniPoly a, UniPoly b)
    : pattern_(std::move(pattern)), a_(std::move(a)), b_(std::move(b)) {
    if (a_.is_constant() || b_.is_constant()) {
        throw std::invalid_argument("a and b must be non-constant");
    }
    if (a_ == b_) {
        throw std::invalid_argument("a and b must differ");
    }
}

QuotientSeq QuotientSeq::parse(std::string_view pattern, UniPoly a, UniPoly b) {
    std::vector<Tag> tags;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        switch (pattern[i]) {
            case 'a':
                tags.push_back(Tag::A);
                break;
            case 'b':
                tags.push_back(Tag::B);
                break;
            case 'c':
                tags.push_back(Tag::AB);
                break;
            default:
                throw ParseError(std::string("pattern letters are a, b, c; got '") + pattern[i] + "'", i);
        }
    }
    return QuotientSeq(std::move(tags), std::move(a), std::move(b));
}

UniPoly QuotientSeq::quotient(std::size_t i) const {
    switch (pattern_.at(i)) {
        case Tag::A:
            return a_;
        case Tag::B:
            return b_;
        case Tag::AB:
            return a_ + b_;
    }
    return {};
}

std::pair<UniPoly, UniPoly> convergents_uni(const QuotientSeq& q, int n) {
    if (n < -1 || n >= static_cast<int>(q.size())) {
        throw std::out_of_range("convergent index must lie in [-1, pattern length)");
    }
    UniPoly p_prev;
    UniPoly q_prev = UniPoly::one();
    UniPoly p = UniPoly::one();
    UniPoly qq;
    for (int i = 0; i <= n; ++i) {
        const UniPoly u = q.quotient(static_cast<std::size_t>(i));
        UniPoly p_next = u * p + p_prev;
        UniPoly q_next = u * qq + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(qq);
        p = std::move(p_next);
        qq = std::move(q_next);
    }
    return {p, qq};
}

namespace {

std::int64_t residual_valuation(const UniPoly& numerator, const UniPoly& q) {
    if (numerator.is_zero()) {
        return kInfinite;
    }
    return 2 * static_cast<std::int64_t>(q.degree()) - numerator.degree();
}

}  // namespace

RiccatiWitness fn_witness(const QuotientSeq& q, int n) {
    const auto [p, qq] = convergents_uni(q, n);
    const UniPoly ab = q.a() * q.b();
    const UniPoly f = ab * (q.a() + q.b()) * p * qq + ab * (p.square() + qq.square());
    const auto g = (f + ab).sqrt();
    if (!g) {
        throw InvariantViolation("F_" + std::to_string(n) + " + ab is not a square");
    }
    RiccatiWitness w;
    w.n = n;
    w.f = f;
    w.g = *g;
    w.residual_valuation = n >= 0 ? residual_valuation(ab.derivative(), qq) : 0;
    return w;
}

RiccatiResidual riccati_residual(const QuotientSeq& q, int n) {
    if (n < 0) {
        throw std::invalid_argument("riccati_residual needs Q_n != 0 (n >= 0)");
    }
    const auto [p, qq] = convergents_uni(q, n);
    const UniPoly ab = q.a() * q.b();
    const UniPoly c = ab * (q.a() + q.b());
    // (c P/Q)' = ((cP)' Q + c P Q') / Q^2 and (ab)'(1 + P^2/Q^2) = (ab)'(Q^2 + P^2) / Q^2
    RiccatiResidual r;
    r.numerator = (c * p).derivative() * qq + c * p * qq.derivative() +
                  ab.derivative() * (qq.square() + p.square());
    r.denominator = qq.square();
    r.matches_closed_form = r.numerator == ab.derivative();
    r.valuation = residual_valuation(r.numerator, qq);
    return r;
}

BaumSweetReport baum_sweet_check(const LaurentSeries& alpha, std::int64_t precision) {
    if (alpha.valuation() < 1) {
        throw std::domain_error("alpha must have no polynomial part (1/t-valuation >= 1)");
    }
    // work at the full precision of alpha and report below `precision`
    const LaurentSeries& a = alpha;
    const LaurentSeries t = LaurentSeries::from_unipoly(UniPoly::monomial(1));
    const LaurentSeries t_t1 = LaurentSeries::from_unipoly(UniPoly::monomial(2) + UniPoly::monomial(1));
    const LaurentSeries one = LaurentSeries::one();

    BaumSweetReport report;
    LaurentSeries residual = ((a * t_t1).derivative() + a.square() + one).truncated(precision);
    report.precision = residual.precision();
    report.residual_valuation = residual.valuation();
    report.residual_vanishes = residual.is_zero();

    // (alpha^2 + t alpha + 1) / (1 + t) must be beta^2 with beta of valuation >= 1
    const LaurentSeries lhs = a.square() + t * a + one;
    const LaurentSeries inv = cfalg::inverse(LaurentSeries::from_unipoly(UniPoly::monomial(1) + UniPoly::one()),
                                             precision + 1);
    const LaurentSeries quotient = (lhs * inv).truncated(precision);
    bool even = true;
    for (auto k : quotient.support()) {
        even = even && k % 2 == 0 && k >= 2;
    }
    report.square_form_holds = even;
    return report;
}

}  // namespace autocf::riccati
