#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "ueda/ueda.hpp"

namespace ueda {

/// Constants K, R, M and the positive majorant coefficients A_ν certifying
/// convergence of the order-by-order linearization. A satisfies
/// A(X) − X = 2KR(1+MR)·A(X)²/(1 − R·A(X)) coefficient-wise, with
/// A₂ = 2KR(1+MR).
struct MajorantLedger {
    Rational K;
    Rational R;
    Rational M;
    std::vector<Rational> A;  // A[ν] for ν = 2..max_order; A[0], A[1] unused

    int max_order() const { return static_cast<int>(A.size()) - 1; }
    const Rational& A_at(int nu) const;
};

/// Norm surrogate of one linearization step against its majorant bound.
struct BoundCheck {
    int order = 0;
    Rational norm_chart0;
    Rational norm_chart1;
    Rational allowed;
    bool ok = true;
};

/// Order-by-order state: after reaching order n the solutions of
/// w_j = u_j + ∑_{ν≤n} F_{j,ν}·u_j^ν agree to O(u^{n+1}) on the overlap.
struct LinearizationState {
    Atlas atlas;
    TransitionExpansion base;       // normalized expansion of the input atlas
    int order = 1;
    std::vector<BSeries> F0;        // F0[ν] on the cusp chart, ν = 2..order
    std::vector<LSeries> F1;        // F1[ν], functions of ζ only
    MajorantLedger ledger;
    std::vector<BoundCheck> bounds;
};

struct LinearizationResult {
    MSeries u0;                     // u₀ transported to the overlap, in w₁
    MSeries u1;
    int agreement_order = 0;
    MajorantLedger ledger;
    Rational radius_bound;
    std::vector<BoundCheck> bounds;
    bool bounds_ok = true;
};

/// (K, R, M) from the atlas: K = max(3·K₀, 1) with K₀ from bounded_split over
/// the documented probe set; R = 1/r_probe (default probe radius r_out); M =
/// the smallest stored-data ratio bound, or 1 vacuously when all f_ν vanish.
std::tuple<Rational, Rational, Rational> estimate_constants(const Atlas& a);
std::tuple<Rational, Rational, Rational> estimate_constants(const Atlas& a,
                                                            const Rational& r_probe);

/// Unique exact solution A₂..A_N of the majorant functional equation.
std::vector<Rational> majorant_sequence(const Rational& K, const Rational& R,
                                        const Rational& M, int N);

/// Coefficient-wise check of the functional equation on a computed ledger.
bool verify_majorant(const MajorantLedger& ledger);

/// Rational lower-bound proxy for the convergence radius: min over ν of a
/// certified lower bound for A_ν^(-1/ν).
Rational radius_estimate(const std::vector<Rational>& A);

MajorantLedger make_ledger(const Atlas& a, int N,
                           const std::optional<Rational>& r_probe = {});

LinearizationState linearize_start(const Atlas& a, int N,
                                   const std::optional<Rational>& r_probe = {});

/// H, I, J at order ℓ = state.order + 1; J is the next obstruction
/// representative.
std::tuple<LSeries, LSeries, LSeries> hij_coefficients(const LinearizationState& s,
                                                       int ell);

/// One induction step: splits J, extends the disc part, records the majorant
/// bound check. Raises finite_type_error on a nonzero obstruction.
LinearizationState linearize_step(const LinearizationState& s);

/// Runs steps to order N, solves the functional equations by reversion on
/// both charts, transports to the overlap and verifies u₀ = u₁ to order N.
LinearizationResult linearize(const Atlas& a, int N,
                              const std::optional<Rational>& r_probe = {});

}  // namespace ueda
