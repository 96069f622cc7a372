#pragma once

#include "ueda/cusp.hpp"
#include "ueda/lseries.hpp"

namespace ueda {

/// The annulus r_in < |ζ| < r_out carrying the two-chart overlap.
struct AnnulusWindow {
    Rational r_in;
    Rational r_out;

    AnnulusWindow(Rational rin, Rational rout);
};

/// 1-cocycle on the two-chart covering: the single component β₀₁ as a Laurent
/// series on the annulus.
struct Cocycle {
    LSeries beta;
};

/// 0-cochain: α₀ on the disc chart (cusp constraint a₁ = 0), α₁ on the
/// exterior chart (no positive exponents, holomorphic at ∞).
struct Cochain {
    CuspFunction alpha0;
    LSeries alpha1;

    Cochain(CuspFunction a0, LSeries a1);
};

/// The obstruction functional: S(β) = −b₁. Linear; zero exactly on
/// coboundaries, so it realizes H¹(C, 𝒪_C) ≅ ℂ.
Scalar s_functional(const Cocycle& c);

/// Raised by split on cocycles with nonzero obstruction.
struct obstruction_error : domain_error {
    Scalar value;
    explicit obstruction_error(Scalar v)
        : domain_error("cocycle is obstructed: S = " + v.str()), value(std::move(v)) {}
};

/// Solves α₁ − α₀ = β. Gauge: the ζ⁰-coefficient of β goes to α₁ and the
/// constant of α₀ is zero. Requires S(β) = 0.
Cochain split(const Cocycle& c);

/// split plus the rational K₀-witness
/// max(circle_norm(α₀, r_out), circle_norm(α₁, r_in)) / min circle_norm of β
/// over the two boundary circles (0 for β = 0).
std::pair<Cochain, Rational> bounded_split(const Cocycle& c, const AnnulusWindow& w);

/// α₁ − α₀ restricted to the overlap.
Cocycle delta(const Cochain& ch);

/// Documented probe set for estimating a global K₀ on a window: monomials
/// ζ^e, |e| ≤ 4, e ≠ 1, plus ζ² + ζ⁻¹. Returns 2 × the max observed ratio.
Rational probe_k0(const AnnulusWindow& w);

}  // namespace ueda
