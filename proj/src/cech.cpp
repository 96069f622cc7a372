#include "ueda/cech.hpp"

#include <algorithm>

namespace ueda {

AnnulusWindow::AnnulusWindow(Rational rin, Rational rout)
    : r_in(std::move(rin)), r_out(std::move(rout)) {
    if (sgn(r_in) <= 0 || r_in >= r_out)
        throw domain_error("AnnulusWindow: need 0 < r_in < r_out");
}

Cochain::Cochain(CuspFunction a0, LSeries a1)
    : alpha0(std::move(a0)), alpha1(std::move(a1)) {
    if (!alpha1.is_zero() && alpha1.hi() > 0)
        throw domain_error("Cochain: α₁ must have no positive exponents");
}

Scalar s_functional(const Cocycle& c) { return -c.beta.coeff(1); }

Cochain split(const Cocycle& c) {
    Scalar s = s_functional(c);
    if (!s.is_zero()) throw obstruction_error(s);
    LSeries pos = c.beta.part_above(0);
    LSeries nonpos = c.beta.part_at_most(0);
    int order = pos.is_zero() ? 0 : pos.hi();
    return Cochain(CuspFunction(to_pseries(-pos, order)), nonpos);
}

std::pair<Cochain, Rational> bounded_split(const Cocycle& c, const AnnulusWindow& w) {
    Cochain ch = split(c);
    if (c.beta.is_zero()) return {std::move(ch), Rational(0)};
    Rational num = std::max(circle_norm(ch.alpha0.series, w.r_out),
                            ch.alpha1.circle_norm(w.r_in));
    Rational den =
        std::min(c.beta.circle_norm(w.r_in), c.beta.circle_norm(w.r_out));
    if (sgn(den) == 0) return {std::move(ch), Rational(0)};
    return {std::move(ch), num / den};
}

Cocycle delta(const Cochain& ch) {
    return Cocycle{ch.alpha1 - to_lseries(ch.alpha0.series)};
}

Rational probe_k0(const AnnulusWindow& w) {
    Rational best(0);
    auto probe = [&](const LSeries& beta) {
        auto [ch, ratio] = bounded_split(Cocycle{beta}, w);
        best = std::max(best, ratio);
    };
    for (int e = -4; e <= 4; ++e) {
        if (e == 1) continue;
        probe(LSeries::monomial(e, Scalar::one()));
    }
    probe(LSeries::monomial(2, Scalar::one()) + LSeries::monomial(-1, Scalar::one()));
    return Rational(2) * best;
}

}  // namespace ueda
