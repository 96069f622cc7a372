#pragma once

#include "ueda/fiber_series.hpp"
#include "ueda/lseries.hpp"

namespace ueda {

/// Truncated power series in one variable with exact Gaussian-rational
/// coefficients: ∑_{n=0}^{N} a_n t^n + O(t^{N+1}).
using PSeries = FiberSeries<Scalar>;

inline PSeries pseries_from(std::initializer_list<Scalar> coeffs) {
    return PSeries(std::vector<Scalar>(coeffs));
}

/// ∑ |a_n|·r^n, the coefficient-sum bound for sup on |t| = r.
inline Rational circle_norm(const PSeries& s, const Rational& r) {
    if (sgn(r) <= 0) throw domain_error("circle_norm: radius must be positive");
    Rational acc(0);
    for (int m = 0; m <= s.order(); ++m)
        acc += s.coeff(m).abs_upper() * rat_pow(r, m);
    return acc;
}

inline LSeries to_lseries(const PSeries& s) {
    std::vector<Scalar> c(s.coeffs());
    return LSeries::from_coeffs(0, std::move(c));
}

/// Power-series part of an LSeries as a PSeries of the given order; the
/// series must have no negative exponents.
inline PSeries to_pseries(const LSeries& s, int order) {
    if (!s.is_zero() && s.lo() < 0)
        throw domain_error("to_pseries: negative exponents present");
    PSeries r(order);
    for (int m = 0; m <= order; ++m) r.set_coeff(m, s.coeff(m));
    return r;
}

}  // namespace ueda
