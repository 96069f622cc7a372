#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "ueda/ueda.hpp"

using namespace ueda;
using ueda::testing::Rng;

namespace {

// Random atlas of type ≥ n: vanishing f up to order n, random data above.
Atlas random_type_n_atlas(Rng& rng, int n, int N_w, int N_zeta) {
    std::map<int, LSeries> target;
    for (int nu = n + 1; nu <= N_w; ++nu)
        if (rng.chance(0.7))
            target[nu] = ueda::testing::random_lseries(rng, -std::min(4, N_zeta),
                                                       std::min(4, N_zeta));
    return make_perturbed_atlas(N_w, N_zeta, target);
}

// Oracle for the order-n identity: expand 1/w₁ⁿ − 1/w₀ⁿ symbolically from the
// raw expansion and read the w₁⁰ coefficient of the w₁ⁿ-shifted series.
LSeries oracle_inverse_difference(const TransitionExpansion& e, int n, int N_w) {
    MSeries t(N_w - 1);
    for (int nu = 2; nu <= e.max_order() && nu - 1 <= t.order(); ++nu)
        t.set_coeff(nu - 1, e.f_at(nu));
    MSeries g = fiber_inverse_pow(t, n);  // (w₁/w₀)ⁿ
    // 1/w₁ⁿ − 1/w₀ⁿ = w₁⁻ⁿ(1 − g); at w₁ = 0 this is −[g]ₙ.
    return -g.coeff(n);
}

}  // namespace

TEST_CASE("verify_type") {
    Atlas trivial = make_trivial_atlas(8, 8);
    for (int n = 1; n <= 7; ++n)
        CHECK(verify_type(SystemN::from_atlas(trivial, n)));

    Atlas pert = make_perturbed_atlas_simple(8, 8, 1, Scalar::one());  // f₂ = ζ
    CHECK(verify_type(SystemN::from_atlas(pert, 1)));  // every system is type 1
    CHECK_FALSE(verify_type(SystemN::from_atlas(pert, 2)));
}

TEST_CASE("obstruction: frozen S-values") {
    // f₂ = ζ → u₁ has value −1: finite type 1.
    Atlas pert = make_perturbed_atlas_simple(8, 8, 1, Scalar::one());
    ObstructionReport r1 = obstruction(SystemN::from_atlas(pert, 1));
    CHECK(r1.order == 1);
    CHECK(r1.value == Scalar(-1));

    // f₂ = ζ² → coboundary, value 0.
    Atlas pert2 = make_perturbed_atlas_simple(8, 8, 1, Scalar::one(), 2);
    CHECK(obstruction(SystemN::from_atlas(pert2, 1)).value.is_zero());

    Atlas trivial = make_trivial_atlas(8, 8);
    for (int n = 1; n <= 7; ++n)
        CHECK(obstruction(SystemN::from_atlas(trivial, n)).value.is_zero());

    CHECK_THROWS_AS(obstruction(SystemN::from_atlas(pert, 2)), precondition_error);
}

TEST_CASE("cocycle identity (1/n)(1/w₁ⁿ − 1/w₀ⁿ)|₀ = f_{n+1}") {
    Atlas pert = make_perturbed_atlas_simple(8, 8, 1, Scalar::one());
    SystemN s = SystemN::from_atlas(pert, 1);
    CHECK(cocycle_identity_check(s));
    LSeries lhs = oracle_inverse_difference(s.expansion, 1, 8).scaled(Scalar(make_rat(1, 1)));
    CHECK(lhs == s.expansion.f_at(2));

    CHECK(cocycle_identity_check(SystemN::from_atlas(make_trivial_atlas(8, 8), 3)));

    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 4));
        Atlas a = random_type_n_atlas(rng, n, 8, 8);
        SystemN sys = SystemN::from_atlas(a, n);
        REQUIRE(verify_type(sys));
        CHECK(cocycle_identity_check(sys));
        LSeries df =
            oracle_inverse_difference(sys.expansion, n, 8).scaled(Scalar(make_rat(1, n)));
        CHECK(df == sys.expansion.f_at(n + 1));
    }
}

TEST_CASE("upgrade: kills coboundary obstructions") {
    // f₂ = ζ²: split gives G₀ = extend(ζ²) = x and the upgrade reaches type 2.
    Atlas pert2 = make_perturbed_atlas_simple(8, 8, 1, Scalar::one(), 2);
    SystemN s = SystemN::from_atlas(pert2, 1);
    SystemN up = upgrade(s);
    CHECK(up.claimed_type == 2);
    CHECK(verify_type(up));
    CHECK(up.expansion.f_at(2).is_zero());

    // Trivial stays trivial.
    SystemN t = upgrade(SystemN::from_atlas(make_trivial_atlas(6, 6), 1));
    CHECK(verify_type(t));
    for (int nu = 2; nu <= 6; ++nu) CHECK(t.expansion.f_at(nu).is_zero());

    // Obstructed upgrade refuses.
    Atlas pert = make_perturbed_atlas_simple(8, 8, 1, Scalar::one());
    CHECK_THROWS_AS(upgrade(SystemN::from_atlas(pert, 1)), finite_type_error);
}

TEST_CASE("chained upgrades on coboundary-only data reach type N_w − 1") {
    Rng rng(42);
    const int N_w = 7;
    std::map<int, LSeries> target;
    for (int nu = 2; nu <= N_w; ++nu) {
        // Kernel cocycles only: no ζ¹ component.
        LSeries f = ueda::testing::random_lseries(rng, -4, 4);
        target[nu] = f - LSeries::monomial(1, f.coeff(1));
    }
    Atlas a = make_perturbed_atlas(N_w, 8, target);
    SystemN s = SystemN::from_atlas(a, 1);
    for (int n = 1; n <= N_w - 1; ++n) {
        CHECK(obstruction(s).value.is_zero());
        if (n < N_w - 1) s = upgrade(s);
    }
    CHECK(s.claimed_type == N_w - 1);
    CHECK(verify_type(s));
}

TEST_CASE("classify: frozen verdicts") {
    Classification triv = classify(make_trivial_atlas(8, 8), 6);
    CHECK_FALSE(triv.finite());
    CHECK(triv.infinite_up_to().max_order == 6);

    Classification f1 = classify(make_perturbed_atlas_simple(8, 8, 1, Scalar::one()), 6);
    REQUIRE(f1.finite());
    CHECK(f1.finite_type().order == 1);
    CHECK(f1.finite_type().report.value == Scalar(-1));

    // f₃ = ζ, f₂ = 0 → finite type 2 after one upgrade.
    Classification f2 = classify(make_perturbed_atlas_simple(8, 8, 2, Scalar::one()), 6);
    REQUIRE(f2.finite());
    CHECK(f2.finite_type().order == 2);
    CHECK_FALSE(f2.finite_type().report.value.is_zero());

    CHECK_THROWS_AS(classify(make_trivial_atlas(4, 4), 6), precondition_error);
}

TEST_CASE("classify: nontrivial normal bundle is rejected") {
    Atlas a = make_trivial_atlas(6, 8);
    LSeries c1_twist = LSeries::one() + LSeries::monomial(1, Scalar(make_rat(1, 4)));
    // Install the twist through the fiber rescaling channel.
    Atlas twisted = a;
    LSeries inv = inverse_unit_onesided(c1_twist, a.work_window());
    LSeries power = LSeries::one();
    for (int m = 1; m <= a.N_w; ++m) {
        power = (power * c1_twist).truncated(0, a.work_window());
        twisted.X_trans.set_coeff(m, a.X_trans.coeff(m) * power);
        twisted.Y_trans.set_coeff(m, a.Y_trans.coeff(m) * power);
    }
    CHECK_FALSE(normal_bundle_class(twisted).trivial());
    CHECK_THROWS_AS(classify(twisted, 4), not_normalizable_error);
    CHECK((inv * c1_twist).truncated(0, 4).is_one());
}

TEST_CASE("classify is invariant under interleaved manual upgrades") {
    Atlas a = make_perturbed_atlas(
        8, 8,
        {{2, LSeries::monomial(2, Scalar(make_rat(1, 2)))},
         {4, LSeries::monomial(1, Scalar(3))}});
    Classification direct = classify(a, 6);
    REQUIRE(direct.finite());

    SystemN s = SystemN::from_atlas(normalize(a), 1);
    s = upgrade(s);  // manual step, then classify the upgraded atlas
    Classification rest = classify(s.atlas, 6);
    REQUIRE(rest.finite());
    CHECK(rest.finite_type().order == direct.finite_type().order);
    CHECK(rest.finite_type().report.value == direct.finite_type().report.value);
}

TEST_CASE("reparametrization invariance (well-definedness of u_n)") {
    Rng rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng.uniform(1, 3));
        Atlas a = random_type_n_atlas(rng, n, 8, 6);
        SystemN s = SystemN::from_atlas(a, n);
        REQUIRE(verify_type(s));
        ObstructionReport before = obstruction(s);

        std::vector<Scalar> constants;
        for (int nu = 2; nu <= n; ++nu)
            constants.push_back(ueda::testing::random_scalar(rng));
        CuspFunction h0_curve = ueda::testing::random_cusp(rng, 6);
        BSeries h0 = extend_to_V0(h0_curve, BSeries::kExactDegree);
        LSeries h1 = ueda::testing::random_lseries(rng, -4, 0);

        Atlas b = reparametrize_system(a, constants, h0, h1, n);
        SystemN sb = SystemN::from_atlas(b, n);
        CHECK(verify_type(sb));
        ObstructionReport after = obstruction(sb);

        CHECK(before.value.is_zero() == after.value.is_zero());
        LSeries diff = after.representative.beta - before.representative.beta;
        CHECK(s_functional(Cocycle{diff}).is_zero());
        // The difference is exactly the coboundary of the h-restrictions in
        // the stored orientation: g − f = h₀|_C − h₁ on the overlap.
        LSeries expected = to_lseries(pullback(h0, 12)) - h1;
        CHECK(diff == expected);
    }
}
