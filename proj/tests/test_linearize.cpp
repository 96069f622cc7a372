#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "ueda/linearize.hpp"

using namespace ueda;
using ueda::testing::Rng;

namespace {

// Coboundary-only perturbation: an infinite-type atlas with nonzero data.
Atlas coboundary_atlas(int N_w, int N_zeta) {
    return make_perturbed_atlas(
        N_w, N_zeta,
        {{2, LSeries::monomial(2, Scalar::one())},
         {3, LSeries::monomial(-1, Scalar(make_rat(1, 2)))}});
}

}  // namespace

TEST_CASE("estimate_constants: frozen example and homogeneity") {
    // Trivial fibration: all f vanish, M is the vacuous 1, K ≥ 1.
    Atlas trivial = make_trivial_atlas(6, 8);
    auto [K0, R0, M0] = estimate_constants(trivial);
    CHECK(M0 == 1);
    CHECK(K0 >= 1);
    CHECK(R0 == 2);  // 1/r_out with the builder annulus (1/4, 1/2)

    // f₂ = ζ at probe radius 1/2 and R = 2: M = (1/2)/4 = 1/8.
    Atlas pert = make_perturbed_atlas_simple(6, 8, 1, Scalar::one());
    auto [K1, R1, M1] = estimate_constants(pert, make_rat(1, 2));
    CHECK(R1 == 2);
    CHECK(M1 == make_rat(1, 8));

    // Doubling all f doubles M and leaves K, R alone.
    Atlas doubled = make_perturbed_atlas_simple(6, 8, 1, Scalar(2));
    auto [K2, R2, M2] = estimate_constants(doubled, make_rat(1, 2));
    CHECK(K2 == K1);
    CHECK(R2 == R1);
    CHECK(M2 == Rational(2) * M1);

    CHECK_THROWS_AS(estimate_constants(pert, Rational(0)), constants_estimation_error);
}

TEST_CASE("majorant_sequence: paper base case and derived A₃") {
    // A₂ = 2KR(1+MR) exactly.
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        Rational K = make_rat(rng.uniform(1, 5));
        Rational R = make_rat(rng.uniform(1, 7), rng.uniform(1, 3));
        Rational M = make_rat(rng.uniform(1, 9), rng.uniform(1, 4));
        auto A = majorant_sequence(K, R, M, 12);
        CHECK(A[2] == Rational(2) * K * R * (1 + M * R));
        for (int nu = 2; nu <= 12; ++nu) CHECK(sgn(A[static_cast<size_t>(nu)]) > 0);
        MajorantLedger ledger{K, R, M, A};
        CHECK(verify_majorant(ledger));
    }

    // With 2KR(1+MR) = 2 and R = 1 the oracle A = X + c(A² + A³ + …) gives
    // A₂ = 2 and A₃ = c(2A₂ + 1) = 10; run the oracle recursion directly.
    std::vector<Rational> a(4, Rational(0));
    a[1] = 1;
    const Rational c(2);
    for (int nu = 2; nu <= 3; ++nu) {
        // c·∑_{m≥2} [A^m]_ν with R = 1.
        std::vector<Rational> pw(a);
        Rational acc(0);
        for (int m = 2; m <= nu; ++m) {
            std::vector<Rational> next(4, Rational(0));
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; i + j <= 3; ++j)
                    next[static_cast<size_t>(i + j)] +=
                        pw[static_cast<size_t>(i)] * a[static_cast<size_t>(j)];
            pw = next;
            acc += pw[static_cast<size_t>(nu)];
        }
        a[static_cast<size_t>(nu)] = c * acc;
    }
    CHECK(a[2] == 2);
    CHECK(a[3] == 10);

    // The library recursion reproduces the oracle when 2KR(1+MR) = 2:
    // pick K = 1, R = 1, M = ... impossible; use K = 5/6, invalid (K ≥ 1).
    // Instead check the recursion against the functional equation directly
    // at a positive triple, plus the A₃ shape c·(2A₂ + R).
    auto A = majorant_sequence(Rational(1), Rational(1), Rational(1), 6);
    Rational cc = Rational(2) * 1 * 1 * (1 + 1);
    CHECK(A[2] == cc);
    CHECK(A[3] == cc * (2 * A[2] + 1));
    CHECK_THROWS_AS(majorant_sequence(make_rat(1, 2), Rational(1), Rational(1), 6),
                    domain_error);
}

TEST_CASE("radius_estimate: frozen values") {
    std::vector<Rational> ones(7, Rational(1));
    CHECK(radius_estimate(ones) == 1);

    std::vector<Rational> geo(7, Rational(0));
    for (int nu = 2; nu <= 6; ++nu) geo[static_cast<size_t>(nu)] = rat_pow(Rational(4), nu);
    CHECK(radius_estimate(geo) == make_rat(1, 4));

    auto A = majorant_sequence(Rational(1), Rational(1), Rational(1), 8);
    Rational r = radius_estimate(A);
    CHECK(sgn(r) > 0);
    // Monotone: scaling A up shrinks the estimate.
    std::vector<Rational> bigger(A);
    for (auto& v : bigger) v *= 16;
    CHECK(radius_estimate(bigger) <= r);
}

TEST_CASE("hij_coefficients: frozen lowest order") {
    // f₂ = ζ², no F yet, ℓ = 2 → I = ζ², H = 0, J = ζ².
    Atlas a = make_perturbed_atlas_simple(6, 8, 1, Scalar::one(), 2);
    LinearizationState st = linearize_start(a, 4);
    auto [H, I, J] = hij_coefficients(st, 2);
    CHECK(H.is_zero());
    CHECK(I == LSeries::monomial(2, Scalar::one()));
    CHECK(J == LSeries::monomial(2, Scalar::one()));
    CHECK_THROWS_AS(hij_coefficients(st, 3), precondition_error);

    // Trivial fibration: everything vanishes at every order.
    LinearizationState tr = linearize_start(make_trivial_atlas(6, 8), 4);
    for (int ell = 2; ell <= 4; ++ell) {
        auto [h, i, j] = hij_coefficients(tr, ell);
        CHECK(h.is_zero());
        CHECK(i.is_zero());
        CHECK(j.is_zero());
        tr = linearize_step(tr);
    }
}

TEST_CASE("linearize_step: chart parts and finite-type detection") {
    Atlas a = make_perturbed_atlas_simple(6, 8, 1, Scalar::one(), 2);
    LinearizationState st = linearize_start(a, 4);
    LinearizationState st2 = linearize_step(st);
    CHECK(st2.order == 2);
    // J = ζ² splits to α₀ = −ζ², so F₀ = extend(ζ²) = x and F₁ = 0.
    CHECK(st2.F0[2] == BSeries::monomial(1, 0, Scalar::one()));
    CHECK(st2.F1[2].is_zero());
    REQUIRE(st2.bounds.size() == 1);
    CHECK(st2.bounds[0].ok);

    Atlas bad = make_perturbed_atlas_simple(6, 8, 1, Scalar::one());  // f₂ = ζ
    LinearizationState sb = linearize_start(bad, 4);
    CHECK_THROWS_AS(linearize_step(sb), finite_type_error);
    try {
        linearize_step(sb);
    } catch (const finite_type_error& e) {
        CHECK(e.report.order == 1);
        CHECK(e.report.value == Scalar(-1));
    }
}

TEST_CASE("linearize: trivial fibration returns u = w") {
    LinearizationResult res = linearize(make_trivial_atlas(6, 8), 6);
    CHECK(res.agreement_order == 6);
    MSeries identity(6);
    identity.set_coeff(1, LSeries::one());
    CHECK(res.u0 == identity);
    CHECK(res.u1 == identity);
    CHECK(res.bounds_ok);
    CHECK(sgn(res.radius_bound) > 0);
}

TEST_CASE("linearize: coboundary-perturbed atlas agrees to the requested order") {
    Atlas a = coboundary_atlas(8, 8);
    LinearizationResult res = linearize(a, 6);
    CHECK(res.agreement_order == 6);
    CHECK(res.u0 == res.u1);
    bool higher_data_all_zero = res.u0.coeff(2).is_zero() && res.u0.coeff(3).is_zero();
    CHECK_FALSE(higher_data_all_zero);
    CHECK(res.bounds_ok);
    // u vanishes exactly on w = 0 with unit leading coefficient.
    CHECK(res.u1.coeff(0).is_zero());
    CHECK(res.u1.coeff(1).is_one());

    // Midpoint check: stopping at order n < N still matches to order n.
    LinearizationState st = linearize_start(a, 6);
    while (st.order < 3) st = linearize_step(st);
    MSeries phi(3);
    phi.set_coeff(1, LSeries::one());
    for (int nu = 2; nu <= 3; ++nu) phi.set_coeff(nu, st.F1[static_cast<size_t>(nu)]);
    MSeries u1 = reversion(phi);
    // Transport chart-0 solution and compare only to fiber order 3.
    LinearizationResult full = linearize(a, 3);
    CHECK(full.u1 == u1);
}

TEST_CASE("linearize: finite type surfaces exactly as in classify") {
    Atlas a = make_perturbed_atlas_simple(8, 8, 2, Scalar(make_rat(5, 3)));
    Classification cls = classify(a, 6);
    REQUIRE(cls.finite());
    try {
        linearize(a, 6);
        FAIL("linearize should have detected finite type");
    } catch (const finite_type_error& e) {
        CHECK(e.report.order == cls.finite_type().order);
        CHECK(e.report.value == cls.finite_type().report.value);
    }
}
