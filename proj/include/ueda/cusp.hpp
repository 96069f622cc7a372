#pragma once

#include "ueda/bseries.hpp"
#include "ueda/pseries.hpp"

namespace ueda {

/// Function on the cusp chart of the curve, presented through the
/// normalization: a power series in ζ whose ζ¹-coefficient vanishes.
struct CuspFunction {
    PSeries series;

    explicit CuspFunction(PSeries s);

    int order() const { return series.order(); }
};

/// ζ-radius of the normalization disc; the cusp chart V₀ is the polydisc
/// |x| < eps0², |y| < 2·eps0³.
struct ChartRadii {
    Rational eps0;

    explicit ChartRadii(Rational e);

    Rational x_radius() const { return eps0 * eps0; }
    Rational y_radius() const { return Rational(2) * eps0 * eps0 * eps0; }
};

/// True iff the ζ¹-coefficient of s vanishes.
bool is_cusp_member(const PSeries& s);

/// Substitution x → ζ², y → ζ³; exact to ζ-order 2·degree(F)+1.
PSeries pullback(const BSeries& F);
PSeries pullback(const BSeries& F, int zeta_order);

/// The explicit bounded extension: a₀ + ∑ a_{2m} x^m + ∑ a_{2m+1} x^{m-1} y.
/// Inverse to pullback on cusp functions, linear, and bounded by 3× on the
/// polydisc (witnessed by extension_bound_report).
BSeries extend_to_V0(const CuspFunction& f);
BSeries extend_to_V0(const CuspFunction& f, int degree);

/// (B_F, B_f): coefficient-sum bounds for the extension on the polydisc and
/// for f on |ζ| = eps0. The computable witness for the 3M estimate.
std::pair<Rational, Rational> extension_bound_report(const CuspFunction& f,
                                                     const ChartRadii& radii);

}  // namespace ueda
