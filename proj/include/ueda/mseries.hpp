#pragma once

#include "ueda/bseries.hpp"
#include "ueda/fiber_series.hpp"
#include "ueda/lseries.hpp"
#include "ueda/pseries.hpp"

namespace ueda {

/// Truncated series in the fiber variable w whose coefficients are Laurent
/// series in ζ: ∑_{m=0}^{N_w} c_m(ζ)·w^m. The workhorse for overlap data.
using MSeries = FiberSeries<LSeries>;

/// Series in w with coefficients holomorphic on the cusp chart (BSeries).
using WSeriesB = FiberSeries<BSeries>;

/// Lifts scalar fiber coefficients to constant-in-ζ ones.
inline MSeries lift_to_mseries(const PSeries& s) {
    MSeries r(s.order());
    for (int m = 0; m <= s.order(); ++m)
        r.set_coeff(m, LSeries::constant(s.coeff(m)));
    return r;
}

/// outer(inner) where outer is a plain power series and inner an MSeries with
/// vanishing fiber-constant term.
inline MSeries compose(const PSeries& outer, const MSeries& inner) {
    return compose(lift_to_mseries(outer), inner);
}

/// Applies an LSeries window cut to every fiber coefficient.
inline MSeries zeta_truncated(const MSeries& s, int lo, int hi) {
    MSeries r(s.order());
    for (int m = 0; m <= s.order(); ++m) r.set_coeff(m, s.coeff(m).truncated(lo, hi));
    return r;
}

/// (1 + s)^(-n) for s with vanishing fiber-constant term; exact because s is
/// fiber-nilpotent within the truncation.
MSeries fiber_inverse_pow(const MSeries& s, int n);

/// Substitutes x -> X, y -> Y into F. Requires the fiber-constant terms of X
/// and Y to be exactly ζ² and ζ³; expands x^i y^j = ζ^(2i+3j)(1+ξ)^i(1+η)^j
/// with fiber-nilpotent ξ, η so the cost stays near-linear in the terms of F.
MSeries subst_xy(const BSeries& F, const MSeries& X, const MSeries& Y);

}  // namespace ueda
