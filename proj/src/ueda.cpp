#include "ueda/ueda.hpp"

namespace ueda {

SystemN SystemN::from_atlas(Atlas a, int claimed_type) {
    TransitionExpansion e = derive_w_transition(a);
    if (!e.c1.is_one())
        throw precondition_error(
            "system requires a normalized atlas (derived c1 must be ≡ 1); "
            "run normalize first");
    if (claimed_type < 1) throw precondition_error("claimed type must be ≥ 1");
    return SystemN{std::move(a), std::move(e), claimed_type};
}

bool verify_type(const SystemN& s) {
    for (int nu = 2; nu <= std::min(s.claimed_type, s.expansion.max_order()); ++nu)
        if (!s.expansion.f_at(nu).is_zero()) return false;
    return true;
}

ObstructionReport obstruction(const SystemN& s) {
    if (!verify_type(s))
        throw precondition_error("obstruction: system is not of its claimed type");
    const int n = s.claimed_type;
    if (n + 1 > s.atlas.N_w)
        throw precondition_error("obstruction: order " + std::to_string(n) +
                                 " needs f_" + std::to_string(n + 1) +
                                 " beyond the fiber truncation");
    ObstructionReport r;
    r.order = n;
    r.representative = Cocycle{s.expansion.f_at(n + 1)};
    r.value = s_functional(r.representative);
    return r;
}

bool cocycle_identity_check(const SystemN& s) {
    if (!verify_type(s))
        throw precondition_error("cocycle_identity_check: type violation");
    const int n = s.claimed_type;
    if (n + 1 > s.atlas.N_w) return true;  // nothing to compare at this depth
    // w₀ = w₁(1 + t) with t = ∑_{ν≥2} f_ν·w₁^(ν-1); then
    // (1/n)(1/w₁ⁿ − 1/w₀ⁿ)|₀ = −(1/n)·[(1+t)^(-n)]ₙ must equal f_{n+1}.
    MSeries t(s.atlas.N_w - 1);
    for (int nu = 2; nu <= s.expansion.max_order(); ++nu) {
        if (nu - 1 > t.order()) break;
        t.set_coeff(nu - 1, s.expansion.f_at(nu));
    }
    MSeries g = fiber_inverse_pow(t, n);
    LSeries lhs = g.coeff(n).scaled(Scalar(make_rat(-1, n)));
    return lhs == s.expansion.f_at(n + 1);
}

SystemN upgrade(const SystemN& s) {
    ObstructionReport rep = obstruction(s);
    if (!rep.value.is_zero()) throw finite_type_error(std::move(rep));
    const int n = s.claimed_type;

    // g₀ − g₁ = f_{n+1} with g₀ on the disc, g₁ exterior.
    Cochain ch = split(rep.representative);
    CuspFunction g0(-ch.alpha0.series);
    LSeries g1 = -ch.alpha1;

    Atlas out = s.atlas;
    // Chart 0: v₀ = w₀(1 − G₀·w₀ⁿ) folds into the unit.
    if (!g0.series.is_zero()) {
        BSeries G0 = extend_to_V0(g0, BSeries::kExactDegree);
        BSeries q = BSeries::monomial(0, 2, Scalar::one()) -
                    BSeries::monomial(3, 0, Scalar::one());
        BSeries w0n = (s.atlas.w0_unit * q).pow(n);
        out.w0_unit = s.atlas.w0_unit * (BSeries::one() - G0 * w0n);
    }
    // Chart 1: v₁ = w₁ − g₁·w₁^(n+1); re-express the transitions in v₁.
    if (!g1.is_zero()) {
        MSeries phi(s.atlas.N_w);
        phi.set_coeff(1, LSeries::one());
        phi.set_coeff(n + 1, -g1);
        MSeries psi = reversion(phi);
        out.X_trans = compose(s.atlas.X_trans.truncated(s.atlas.N_w), psi);
        out.Y_trans = compose(s.atlas.Y_trans.truncated(s.atlas.N_w), psi);
    }

    SystemN next = SystemN::from_atlas(std::move(out), n + 1);
    if (!verify_type(next))
        throw atlas_inconsistency_error(
            "upgrade failed to produce a type-" + std::to_string(n + 1) + " system");
    return next;
}

Classification classify(const Atlas& a, int N_max) {
    if (N_max < 1) throw domain_error("classify: N_max must be ≥ 1");
    if (N_max > a.N_w - 1)
        throw precondition_error("classify: N_max must be ≤ N_w − 1");
    NormalBundleReport nb = normal_bundle_class(a);
    if (!nb.trivial()) throw not_normalizable_error(nb);

    SystemN s = SystemN::from_atlas(normalize(a), 1);
    for (int n = 1; n <= N_max; ++n) {
        ObstructionReport rep = obstruction(s);
        if (!rep.value.is_zero())
            return Classification{FiniteType{n, std::move(rep)}};
        if (n < N_max) s = upgrade(s);
    }
    return Classification{InfiniteUpTo{N_max}};
}

Atlas reparametrize_system(const Atlas& a, const std::vector<Scalar>& constants,
                           const BSeries& h0, const LSeries& h1, int n) {
    if (n < 1 || n + 1 > a.N_w)
        throw domain_error("reparametrize_system: need 1 ≤ n ≤ N_w − 1");
    if (static_cast<int>(constants.size()) != std::max(0, n - 1))
        throw domain_error("reparametrize_system: expected constants c_2..c_n");

    Atlas out = a;
    // Chart 0: v₀ = w₀·(1 + ∑ c_ν·w₀^(ν-1) + h₀·w₀ⁿ).
    BSeries q = BSeries::monomial(0, 2, Scalar::one()) -
                BSeries::monomial(3, 0, Scalar::one());
    BSeries w0 = a.w0_unit * q;
    BSeries factor = BSeries::one();
    for (int nu = 2; nu <= n; ++nu)
        factor = factor +
                 w0.pow(nu - 1).scaled(constants[static_cast<size_t>(nu - 2)]);
    factor = factor + h0 * w0.pow(n);
    out.w0_unit = a.w0_unit * factor;

    // Chart 1: v₁ = w₁ + ∑ c_ν·w₁^ν + h₁·w₁^(n+1).
    MSeries phi(a.N_w);
    phi.set_coeff(1, LSeries::one());
    for (int nu = 2; nu <= n; ++nu)
        phi.set_coeff(nu,
                      LSeries::constant(constants[static_cast<size_t>(nu - 2)]));
    phi.set_coeff(n + 1, phi.coeff(n + 1) + h1);
    MSeries psi = reversion(phi);
    out.X_trans = compose(a.X_trans.truncated(a.N_w), psi);
    out.Y_trans = compose(a.Y_trans.truncated(a.N_w), psi);
    return out;
}

}  // namespace ueda
