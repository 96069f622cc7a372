#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "ueda/atlas.hpp"
#include "ueda/json_io.hpp"

using namespace ueda;
using ueda::testing::Rng;

namespace {

// Oracle: expand w0_unit(X,Y)·(Y² − X³) directly with plain series ops.
MSeries oracle_w0(const Atlas& a) {
    MSeries X = a.X_trans.truncated(a.N_w);
    MSeries Y = a.Y_trans.truncated(a.N_w);
    return subst_xy(a.w0_unit, X, Y) * (Y * Y - X * X * X);
}

}  // namespace

TEST_CASE("validate: trivial model passes, broken fields are named") {
    Atlas a = make_trivial_atlas(6, 8);
    CHECK(validate(a).empty());

    Atlas bad_x = a;
    bad_x.X_trans.set_coeff(0, LSeries::monomial(3, Scalar::one()));
    auto v1 = validate(bad_x);
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].find("X_trans") != std::string::npos);
    CHECK(v1[0].find("curve-embedding") != std::string::npos);

    Atlas bad_unit = a;
    bad_unit.w0_unit = BSeries();
    auto v2 = validate(bad_unit);
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].find("w0_unit") != std::string::npos);
    CHECK_THROWS_AS(derive_w_transition(bad_unit), atlas_inconsistency_error);
}

TEST_CASE("derive_w_transition: trivial fibration gives c1 = 1, f = 0") {
    Atlas a = make_trivial_atlas(8, 8);
    TransitionExpansion e = derive_w_transition(a);
    CHECK(e.c1.is_one());
    for (int nu = 2; nu <= 8; ++nu) CHECK(e.f_at(nu).is_zero());

    MSeries w0 = oracle_w0(a);
    CHECK(w0.coeff(0).is_zero());
    CHECK(w0.coeff(1).is_one());
}

TEST_CASE("derive_w_transition: perturbed builder hits its target exactly") {
    Atlas a = make_perturbed_atlas_simple(8, 8, 1, Scalar::one());  // f₂ = ζ
    TransitionExpansion e = derive_w_transition(a);
    CHECK(e.c1.is_one());
    CHECK(e.f_at(2) == LSeries::monomial(1, Scalar::one()));
    for (int nu = 3; nu <= 8; ++nu) CHECK(e.f_at(nu).is_zero());

    // The same through the direct-expansion oracle.
    MSeries w0 = oracle_w0(a);
    CHECK(w0.coeff(2) == LSeries::monomial(1, Scalar::one()));

    // Richer target data round-trips through the builder too.
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        std::map<int, LSeries> target;
        for (int nu = 2; nu <= 6; ++nu)
            if (rng.chance(0.6)) target[nu] = ueda::testing::random_lseries(rng, -4, 4);
        Atlas b = make_perturbed_atlas(6, 4, target);
        TransitionExpansion eb = derive_w_transition(b);
        CHECK(eb.c1.is_one());
        for (int nu = 2; nu <= 6; ++nu) {
            auto it = target.find(nu);
            if (it == target.end())
                CHECK(eb.f_at(nu).is_zero());
            else
                CHECK(eb.f_at(nu) == it->second);
        }
    }
}

TEST_CASE("derive_w_transition: linear in the unit") {
    Atlas a = make_perturbed_atlas_simple(6, 8, 1, Scalar::one());
    Atlas doubled = a;
    doubled.w0_unit = a.w0_unit.scaled(Scalar(2));
    TransitionExpansion e1 = derive_w_transition(a);
    TransitionExpansion e2 = derive_w_transition(doubled);
    CHECK(e2.c1 == e1.c1.scaled(Scalar(2)));
    CHECK(e2.f_at(2) == e1.f_at(2).scaled(Scalar(2)));
}

TEST_CASE("normal_bundle_class: frozen examples") {
    AnnulusWindow w(make_rat(1, 4), make_rat(1, 2));

    NormalBundleReport triv = normal_bundle_class_of(LSeries::one(), w);
    CHECK(triv.winding == 0);
    CHECK(triv.pic0_class.is_zero());
    CHECK(triv.trivial());

    // exp-truncation of e^ζ: class −[log]₁ = −1.
    LSeries expz = LSeries::one();
    {
        Rational c(1);
        for (int m = 1; m <= 6; ++m) {
            c /= m;
            expz = expz + LSeries::monomial(m, Scalar(c));
        }
    }
    NormalBundleReport r = normal_bundle_class_of(expz, w);
    CHECK(r.winding == 0);
    CHECK(r.pic0_class == Scalar(-1));

    // ζ·(unit): winding 1.
    LSeries zu = LSeries::monomial(1, Scalar::one()) + LSeries::monomial(2, Scalar(make_rat(1, 4)));
    NormalBundleReport r2 = normal_bundle_class_of(zu, w);
    CHECK(r2.winding == 1);

    CHECK_THROWS_AS(normal_bundle_class_of(LSeries(), w), degenerate_normal_bundle_error);
}

TEST_CASE("normal_bundle_class: invariance under cusp-ring unit multiplication") {
    Rng rng(32);
    Atlas base = make_perturbed_atlas_simple(4, 8, 1, Scalar(make_rat(1, 8)), 2);
    NormalBundleReport before = normal_bundle_class(base);
    for (int trial = 0; trial < 20; ++trial) {
        // Small cusp-ring unit: 1 + (a₁ = 0 tail) with tiny coefficients so
        // the annulus certificate stays valid.
        PSeries u(6);
        u.set_coeff(0, Scalar::one());
        for (int m = 2; m <= 6; ++m)
            if (rng.chance(0.5))
                u.set_coeff(m, Scalar(make_rat(rng.uniform(-1, 1), 16)));
        Atlas modified = base;
        modified.w0_unit =
            base.w0_unit * extend_to_V0(CuspFunction(u), BSeries::kExactDegree);
        NormalBundleReport after = normal_bundle_class(modified);
        CHECK(after.winding == before.winding);
        CHECK(after.pic0_class == before.pic0_class);
    }
}

TEST_CASE("normalize: idempotence, constants, exp units") {
    Atlas a = make_trivial_atlas(4, 6);
    Atlas again = normalize(a);
    CHECK(to_json(again) == to_json(a));

    // c1 = 2: the constant moves into the w₁-rescaling.
    Atlas doubled = a;
    doubled.w0_unit = BSeries::constant(Scalar(2));
    CHECK(derive_w_transition(doubled).c1 == LSeries::constant(Scalar(2)));
    Atlas fixed = normalize(doubled);
    TransitionExpansion e = derive_w_transition(fixed);
    CHECK(e.c1.is_one());

    // c1 = truncated e^(ζ²): a genuine cusp-ring unit normalizes away.
    PSeries expz2(6);
    {
        Rational c(1);
        expz2.set_coeff(0, Scalar::one());
        for (int m = 1; 2 * m <= 6; ++m) {
            c /= m;
            expz2.set_coeff(2 * m, Scalar(c));
        }
    }
    Atlas twisted = a;
    twisted.w0_unit =
        a.w0_unit * extend_to_V0(CuspFunction(expz2), BSeries::kExactDegree);
    CHECK_FALSE(derive_w_transition(twisted).c1.is_one());
    CHECK(normal_bundle_class(twisted).trivial());
    Atlas renorm = normalize(twisted);
    TransitionExpansion e2 = derive_w_transition(renorm);
    CHECK(e2.c1.truncated(-a.N_zeta, a.N_zeta).is_one());

    // A c1 with nonzero ζ¹-log-coefficient carries a nontrivial class.
    LSeries c1_obstructed = LSeries::one() + LSeries::monomial(1, Scalar(make_rat(1, 4)));
    NormalBundleReport rep = normal_bundle_class_of(c1_obstructed, a.annulus);
    CHECK_FALSE(rep.trivial());
    CHECK(rep.pic0_class == Scalar(make_rat(-1, 4)));
}

TEST_CASE("normalize: exterior-side unit (negative tail)") {
    Atlas a = make_trivial_atlas(4, 6);
    // Scale the fiber coordinate by an exterior unit u₁ = 1 + ζ⁻¹/8: the
    // derived c1 becomes u₁ and must normalize back to 1.
    LSeries u1 = LSeries::one() + LSeries::monomial(-1, Scalar(make_rat(1, 8)));
    LSeries u1_inv = inverse_unit_onesided(u1, a.work_window());
    Atlas scaled = a;
    LSeries power = LSeries::one();
    for (int m = 1; m <= a.N_w; ++m) {
        power = (power * u1).truncated(-a.work_window(), 0);
        scaled.X_trans.set_coeff(m, a.X_trans.coeff(m) * power);
        scaled.Y_trans.set_coeff(m, a.Y_trans.coeff(m) * power);
    }
    // w₀∘T in the rescaled coordinate w₁' = u₁⁻¹·w₁ picks up u₁^m at order m,
    // so c1 = u₁ up to window truncation.
    TransitionExpansion e = derive_w_transition(scaled);
    CHECK(e.c1.truncated(-6, 6) == u1);
    NormalBundleReport rep = normal_bundle_class(scaled);
    CHECK(rep.trivial());
    Atlas back = normalize(scaled);
    CHECK(derive_w_transition(back).c1.truncated(-a.N_zeta, a.N_zeta).is_one());
    CHECK_EQ(inverse_unit_onesided(u1_inv, 4).truncated(-4, 0),
             u1.truncated(-4, 0));
}

TEST_CASE("atlas JSON round-trip is bit-exact") {
    Atlas a = make_perturbed_atlas_simple(5, 7, 2, Scalar(make_rat(3, 7)), -2);
    Json j = to_json(a);
    Atlas b = atlas_from_json(j);
    CHECK(to_json(b) == j);
    CHECK(validate(b).empty());
}
