#include "ueda/atlas.hpp"

#include <algorithm>

namespace ueda {

const LSeries& TransitionExpansion::f_at(int nu) const {
    static const LSeries zero;
    if (nu < 2 || nu > max_order()) return zero;
    return f[static_cast<size_t>(nu)];
}

std::vector<std::string> validate(const Atlas& a) {
    std::vector<std::string> violations;
    if (a.N_w < 1) violations.push_back("N_w: fiber truncation order must be ≥ 1");
    if (a.N_zeta < 0) violations.push_back("N_zeta: window bound must be ≥ 0");
    if (a.X_trans.order() < a.N_w)
        violations.push_back("X_trans: fiber order below N_w");
    if (a.Y_trans.order() < a.N_w)
        violations.push_back("Y_trans: fiber order below N_w");
    if (!(a.X_trans.coeff(0) == LSeries::monomial(2, Scalar::one())))
        violations.push_back("X_trans: curve-embedding violation (w₁⁰ term must be ζ²)");
    if (!(a.Y_trans.coeff(0) == LSeries::monomial(3, Scalar::one())))
        violations.push_back("Y_trans: curve-embedding violation (w₁⁰ term must be ζ³)");
    if (a.w0_unit.constant_term().is_zero())
        violations.push_back("w0_unit: unit violation (constant term must be nonzero)");
    return violations;
}

TransitionExpansion derive_w_transition(const Atlas& a) {
    auto violations = validate(a);
    if (!violations.empty()) {
        std::string msg = "atlas fails validation:";
        for (const auto& v : violations) msg += " [" + v + "]";
        throw atlas_inconsistency_error(msg);
    }
    const int N = a.N_w;
    MSeries X = a.X_trans.truncated(N);
    MSeries Y = a.Y_trans.truncated(N);
    MSeries p = Y * Y - X * X * X;
    MSeries unit = subst_xy(a.w0_unit, X, Y);
    MSeries w0 = unit * p;
    if (!w0.coeff(0).is_zero())
        throw atlas_inconsistency_error(
            "w₁⁰ term of w₀∘T does not vanish: curve does not map to the curve");
    TransitionExpansion e;
    e.c1 = w0.coeff(1);
    e.f.resize(static_cast<size_t>(N) + 1);
    for (int nu = 2; nu <= N; ++nu) e.f[static_cast<size_t>(nu)] = w0.coeff(nu);
    return e;
}

namespace {

struct UnitForm {
    int winding = 0;
    Scalar v0;
    LSeries h;  // one-sided, v = v0·ζ^winding·(1 + h)
};

// Certified presentations c1 = v0·ζ^w·(1+h) with h one-sided and |h| < 1 on
// the annulus. The norm certificate forces uniqueness of the winding.
UnitForm certify_unit(const LSeries& c1, const AnnulusWindow& w) {
    if (c1.is_zero())
        throw degenerate_normal_bundle_error("c1 vanishes identically");
    std::vector<UnitForm> found;
    for (int wind = c1.lo(); wind <= c1.hi(); ++wind) {
        LSeries v = c1.shifted(-wind);
        Scalar v0 = v.coeff(0);
        if (v0.is_zero()) continue;
        LSeries h = (v - LSeries::constant(v0)).scaled(Scalar::one() / v0);
        LSeries h_neg = h.part_below(0);
        LSeries h_pos = h.part_above(0);
        Rational budget(0);
        if (!h_neg.is_zero()) budget += h_neg.circle_norm(w.r_in);
        if (!h_pos.is_zero()) budget += h_pos.circle_norm(w.r_out);
        if (budget < 1) found.push_back({wind, v0, h});
    }
    if (found.empty())
        throw degenerate_normal_bundle_error(
            "c1 admits no certified unit presentation on the annulus "
            "(no winding with |c1·ζ^{-m}/const − 1| < 1)");
    if (found.size() > 1)
        throw degenerate_normal_bundle_error(
            "c1 certification is ambiguous on the annulus");
    UnitForm u = found.front();
    if (!u.h.is_zero() && u.h.lo() < 0 && u.h.hi() > 0)
        throw degenerate_normal_bundle_error(
            "c1 has mixed Laurent tails; its logarithm is not exactly computable — "
            "present c1 as a product of one-sided units");
    return u;
}

}  // namespace

NormalBundleReport normal_bundle_class_of(const LSeries& c1, const AnnulusWindow& w) {
    UnitForm u = certify_unit(c1, w);
    NormalBundleReport report;
    report.winding = u.winding;
    // S(log(1+h)) = −[log(1+h)]₁; the ζ¹-coefficient is h₁ when h is
    // positive-sided and 0 when negative-sided.
    if (!u.h.is_zero() && u.h.lo() >= 1) report.pic0_class = -u.h.coeff(1);
    return report;
}

NormalBundleReport normal_bundle_class(const Atlas& a) {
    return normal_bundle_class_of(derive_w_transition(a).c1, a.annulus);
}

Atlas normalize(const Atlas& a) {
    TransitionExpansion e = derive_w_transition(a);
    if (e.c1.is_one()) return a;

    UnitForm u = certify_unit(e.c1, a.annulus);
    NormalBundleReport report;
    report.winding = u.winding;
    if (!u.h.is_zero() && u.h.lo() >= 1) report.pic0_class = -u.h.coeff(1);
    if (!report.trivial()) throw not_normalizable_error(report);

    const int W = a.work_window();
    Atlas out = a;

    // c1 = v0·(1+h) = u1/u0 with u0 a cusp-ring unit and u1 exterior:
    // the disc part of log c1 exponentiates into w0_unit, the exterior part
    // (and the constant, by the split gauge) rescales w₁.
    LSeries u1 = LSeries::constant(u.v0);
    if (!u.h.is_zero()) {
        LSeries ell = log1p_onesided(u.h, W);
        if (u.h.lo() >= 1) {
            LSeries u0 = exp_onesided(-ell, W);
            CuspFunction cusp_unit(to_pseries(u0, W));
            out.w0_unit = a.w0_unit * extend_to_V0(cusp_unit, a.work_degree());
        } else {
            u1 = u1 * exp_onesided(ell, W);
        }
    }

    // w₁' = u1·w₁, so the stored transitions pick up u1^(-m) at fiber order m.
    LSeries u1_inv = inverse_unit_onesided(u1, W);
    MSeries Xp(a.X_trans.order()), Yp(a.Y_trans.order());
    Xp.set_coeff(0, a.X_trans.coeff(0));
    Yp.set_coeff(0, a.Y_trans.coeff(0));
    LSeries power = LSeries::one();
    for (int m = 1; m <= std::max(Xp.order(), Yp.order()); ++m) {
        power = (power * u1_inv).truncated(-W, 0);
        if (m <= Xp.order()) Xp.set_coeff(m, a.X_trans.coeff(m) * power);
        if (m <= Yp.order()) Yp.set_coeff(m, a.Y_trans.coeff(m) * power);
    }
    out.X_trans = Xp;
    out.Y_trans = Yp;
    return out;
}

namespace {

// Truncation of sqrt(1 + t).
PSeries sqrt_series(int order) {
    PSeries s(order);
    Rational c(1);
    s.set_coeff(0, Scalar(c));
    for (int m = 1; m <= order; ++m) {
        c *= Rational(3 - 2 * m) / Rational(2 * m);
        s.set_coeff(m, Scalar(c));
    }
    return s;
}

}  // namespace

Atlas make_perturbed_atlas(int N_w, int N_zeta,
                           const std::map<int, LSeries>& f_by_order) {
    if (N_w < 1) throw domain_error("atlas builder: N_w must be ≥ 1");
    for (const auto& [nu, f] : f_by_order) {
        if (nu < 2 || nu > N_w)
            throw domain_error("atlas builder: perturbation order " +
                               std::to_string(nu) + " outside [2, N_w]");
        if (!f.is_zero() && (f.lo() < -N_zeta || f.hi() > N_zeta))
            throw window_mismatch_error(
                "atlas builder: f_" + std::to_string(nu) + " support [" +
                std::to_string(f.lo()) + "," + std::to_string(f.hi()) +
                "] exceeds declared window [-" + std::to_string(N_zeta) + "," +
                std::to_string(N_zeta) + "]");
    }

    // Target w₀∘T = P(w₁) = w₁ + ∑ f_ν·w₁^ν; Y solves Y² = X³ + P order by
    // order via the truncated square root, keeping the identity exact to N_w.
    MSeries P(N_w);
    P.set_coeff(1, LSeries::one());
    for (const auto& [nu, f] : f_by_order) P.set_coeff(nu, f);

    MSeries v(N_w);
    for (int m = 1; m <= N_w; ++m) v.set_coeff(m, P.coeff(m).shifted(-6));

    MSeries s = compose(sqrt_series(N_w), v);
    MSeries X(N_w), Y(N_w);
    X.set_coeff(0, LSeries::monomial(2, Scalar::one()));
    for (int m = 0; m <= N_w; ++m) Y.set_coeff(m, s.coeff(m).shifted(3));

    return Atlas{ChartRadii(make_rat(1, 2)),
                 AnnulusWindow(make_rat(1, 4), make_rat(1, 2)),
                 std::move(X),
                 std::move(Y),
                 BSeries::one(),
                 N_w,
                 N_zeta};
}

Atlas make_trivial_atlas(int N_w, int N_zeta) {
    return make_perturbed_atlas(N_w, N_zeta, {});
}

Atlas make_perturbed_atlas_simple(int N_w, int N_zeta, int order, const Scalar& value,
                                  int exponent) {
    if (order < 1 || order + 1 > N_w)
        throw domain_error("perturbation order must satisfy 1 ≤ n ≤ N_w − 1");
    return make_perturbed_atlas(N_w, N_zeta,
                                {{order + 1, LSeries::monomial(exponent, value)}});
}

}  // namespace ueda
