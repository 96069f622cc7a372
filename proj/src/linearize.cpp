#include "ueda/linearize.hpp"

#include <algorithm>

namespace ueda {

const Rational& MajorantLedger::A_at(int nu) const {
    if (nu < 2 || nu > max_order())
        throw out_of_window_error("majorant coefficient A_" + std::to_string(nu) +
                                  " not computed");
    return A[static_cast<size_t>(nu)];
}

std::tuple<Rational, Rational, Rational> estimate_constants(const Atlas& a) {
    return estimate_constants(a, a.annulus.r_out);
}

std::tuple<Rational, Rational, Rational> estimate_constants(const Atlas& a,
                                                            const Rational& r_probe) {
    if (sgn(r_probe) <= 0)
        throw constants_estimation_error("probe radius must be positive");
    TransitionExpansion e = derive_w_transition(a);
    if (!e.c1.is_one())
        throw precondition_error("estimate_constants requires a normalized atlas");

    Rational K = Rational(3) * probe_k0(a.annulus);
    if (K < 1) K = 1;
    Rational R = Rational(1) / r_probe;

    Rational M(0);
    for (int nu = 2; nu <= e.max_order(); ++nu) {
        const LSeries& f = e.f_at(nu);
        if (f.is_zero()) continue;
        Rational denom = rat_pow(R, nu);
        Rational inner_ratio = f.circle_norm(a.annulus.r_in) / denom;
        Rational outer_ratio = f.circle_norm(a.annulus.r_out) / denom;
        if (inner_ratio > M) M = inner_ratio;
        if (outer_ratio > M) M = outer_ratio;
    }
    if (sgn(M) == 0) M = 1;  // vacuous choice when all f_ν vanish
    return {K, R, M};
}

std::vector<Rational> majorant_sequence(const Rational& K, const Rational& R,
                                        const Rational& M, int N) {
    if (K < 1 || sgn(R) <= 0 || sgn(M) <= 0)
        throw domain_error("majorant_sequence: need K ≥ 1, R > 0, M > 0");
    if (N < 2) throw domain_error("majorant_sequence: N must be ≥ 2");
    const Rational c = Rational(2) * K * R * (Rational(1) + M * R);

    // A(X) = X + ∑ A_ν X^ν solves A − X = c·∑_{k≥0} R^k A^(k+2), so
    // A_ν = c·∑_{m=2}^{ν} R^(m−2)·[A^m]_ν, which only uses lower orders.
    std::vector<Rational> a(static_cast<size_t>(N) + 1, Rational(0));
    a[1] = 1;
    auto convolve = [&](const std::vector<Rational>& p, int top) {
        std::vector<Rational> r(static_cast<size_t>(top) + 1, Rational(0));
        for (int i = 1; i <= top; ++i) {
            if (sgn(p[static_cast<size_t>(i)]) == 0) continue;
            for (int j = 1; i + j <= top; ++j)
                r[static_cast<size_t>(i + j)] +=
                    p[static_cast<size_t>(i)] * a[static_cast<size_t>(j)];
        }
        return r;
    };
    for (int nu = 2; nu <= N; ++nu) {
        std::vector<Rational> power = convolve(a, nu);  // A², truncated
        Rational acc = power[static_cast<size_t>(nu)];
        Rational rk(1);
        for (int m = 3; m <= nu; ++m) {
            power = convolve(power, nu);
            rk *= R;
            acc += rk * power[static_cast<size_t>(nu)];
        }
        a[static_cast<size_t>(nu)] = c * acc;
    }
    return a;
}

bool verify_majorant(const MajorantLedger& ledger) {
    const int N = ledger.max_order();
    if (N < 2) return false;
    const Rational c =
        Rational(2) * ledger.K * ledger.R * (Rational(1) + ledger.M * ledger.R);
    std::vector<Rational> a(static_cast<size_t>(N) + 1, Rational(0));
    a[1] = 1;
    for (int nu = 2; nu <= N; ++nu) a[static_cast<size_t>(nu)] = ledger.A_at(nu);

    auto mul_trunc = [N](const std::vector<Rational>& p,
                         const std::vector<Rational>& q) {
        std::vector<Rational> r(static_cast<size_t>(N) + 1, Rational(0));
        for (int i = 0; i <= N; ++i) {
            if (sgn(p[static_cast<size_t>(i)]) == 0) continue;
            for (int j = 0; i + j <= N; ++j)
                r[static_cast<size_t>(i + j)] +=
                    p[static_cast<size_t>(i)] * q[static_cast<size_t>(j)];
        }
        return r;
    };
    // rhs = c·A²/(1 − R·A) expanded by the Neumann sum.
    std::vector<Rational> a2 = mul_trunc(a, a);
    std::vector<Rational> geom(static_cast<size_t>(N) + 1, Rational(0));
    geom[0] = 1;
    std::vector<Rational> ra(static_cast<size_t>(N) + 1, Rational(0));
    for (int i = 0; i <= N; ++i) ra[static_cast<size_t>(i)] = ledger.R * a[static_cast<size_t>(i)];
    std::vector<Rational> term = geom;
    for (int k = 1; k <= N; ++k) {
        term = mul_trunc(term, ra);
        for (int i = 0; i <= N; ++i) geom[static_cast<size_t>(i)] += term[static_cast<size_t>(i)];
    }
    std::vector<Rational> rhs = mul_trunc(a2, geom);
    for (int nu = 0; nu <= N; ++nu) {
        Rational lhs = a[static_cast<size_t>(nu)] - (nu == 1 ? Rational(1) : Rational(0));
        if (lhs != c * rhs[static_cast<size_t>(nu)]) return false;
    }
    return true;
}

namespace {

// Largest dyadic r with r^n ≤ q, or the exact root when it is rational with
// power-free detection through mpz_root.
Rational nth_root_lower(const Rational& q, int n) {
    if (sgn(q) <= 0) return Rational(0);
    mpz_class num_root, den_root;
    bool num_exact = mpz_root(num_root.get_mpz_t(), q.get_num().get_mpz_t(),
                              static_cast<unsigned long>(n)) != 0;
    bool den_exact = mpz_root(den_root.get_mpz_t(), q.get_den().get_mpz_t(),
                              static_cast<unsigned long>(n)) != 0;
    if (num_exact && den_exact) {
        Rational r(num_root, den_root);
        r.canonicalize();
        return r;
    }
    Rational hi(1);
    while (rat_pow(hi, n) <= q) hi *= 2;
    Rational lo(0);
    for (int iter = 0; iter < 48; ++iter) {
        Rational mid = (lo + hi) / 2;
        if (rat_pow(mid, n) <= q)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Rational radius_estimate(const std::vector<Rational>& A) {
    if (A.size() < 3) throw domain_error("radius_estimate: empty majorant sequence");
    Rational best(0);
    bool first = true;
    for (int nu = 2; nu < static_cast<int>(A.size()); ++nu) {
        Rational r = nth_root_lower(Rational(1) / A[static_cast<size_t>(nu)], nu);
        if (first || r < best) {
            best = r;
            first = false;
        }
    }
    return best;
}

MajorantLedger make_ledger(const Atlas& a, int N,
                           const std::optional<Rational>& r_probe) {
    auto [K, R, M] =
        r_probe ? estimate_constants(a, *r_probe) : estimate_constants(a);
    MajorantLedger ledger{K, R, M, majorant_sequence(K, R, M, std::max(N, 2))};
    return ledger;
}

LinearizationState linearize_start(const Atlas& a, int N,
                                   const std::optional<Rational>& r_probe) {
    LinearizationState s{a,  derive_w_transition(a), 1, {}, {},
                         make_ledger(a, std::max(N + 1, 2), r_probe), {}};
    if (!s.base.c1.is_one())
        throw precondition_error("linearize requires a normalized atlas");
    s.F0.resize(static_cast<size_t>(N) + 2);
    s.F1.resize(static_cast<size_t>(N) + 2);
    return s;
}

std::tuple<LSeries, LSeries, LSeries> hij_coefficients(const LinearizationState& s,
                                                       int ell) {
    if (ell != s.order + 1)
        throw precondition_error("hij_coefficients: staging error (ℓ must be order+1)");

    // inner = X + ∑_{μ=2..n} F_{1,μ}·X^μ as a formal series in X.
    MSeries inner(ell);
    inner.set_coeff(1, LSeries::one());
    for (int mu = 2; mu <= s.order && mu <= ell; ++mu)
        inner.set_coeff(mu, s.F1[static_cast<size_t>(mu)]);

    std::vector<MSeries> inner_pow(static_cast<size_t>(ell) + 1, MSeries(ell));
    inner_pow[1] = inner;
    for (int k = 2; k <= ell; ++k)
        inner_pow[static_cast<size_t>(k)] = inner_pow[static_cast<size_t>(k - 1)] * inner;

    // I = [∑_ν f_ν·inner^ν]_ℓ from the base expansion.
    LSeries I;
    for (int nu = 2; nu <= std::min(ell, s.base.max_order()); ++nu) {
        const LSeries& f = s.base.f_at(nu);
        if (f.is_zero()) continue;
        I = I + f * inner_pow[static_cast<size_t>(nu)].coeff(ell);
    }

    // H = [∑_ν (∑_{m≥1} G_{ν,m}·inner^m)·X^ν]_ℓ with G from the overlap
    // expansion of F_{0,ν}.
    LSeries H;
    for (int nu = 2; nu <= s.order && nu + 1 <= ell; ++nu) {
        const BSeries& F0 = s.F0[static_cast<size_t>(nu)];
        if (F0.is_zero()) continue;
        MSeries G = subst_xy(F0, s.atlas.X_trans.truncated(ell),
                             s.atlas.Y_trans.truncated(ell));
        G.set_coeff(0, LSeries());  // keep m ≥ 1 only
        MSeries tail = compose(G, inner);
        H = H + tail.coeff(ell - nu);
    }

    LSeries J = -H + I;
    return {H, I, J};
}

LinearizationState linearize_step(const LinearizationState& s) {
    const int ell = s.order + 1;
    auto [H, I, J] = hij_coefficients(s, ell);

    Cocycle rep{J};
    Scalar value = s_functional(rep);
    if (!value.is_zero())
        throw finite_type_error(ObstructionReport{s.order, rep, value});

    Cochain ch = split(rep);
    LinearizationState next = s;
    next.F0[static_cast<size_t>(ell)] =
        extend_to_V0(CuspFunction(-ch.alpha0.series), BSeries::kExactDegree);
    next.F1[static_cast<size_t>(ell)] = -ch.alpha1;
    next.order = ell;

    BoundCheck check;
    check.order = ell;
    check.norm_chart0 = next.F0[static_cast<size_t>(ell)].poly_norm(
        s.atlas.radii.x_radius(), s.atlas.radii.y_radius());
    check.norm_chart1 =
        next.F1[static_cast<size_t>(ell)].is_zero()
            ? Rational(0)
            : next.F1[static_cast<size_t>(ell)].circle_norm(s.atlas.annulus.r_in);
    check.allowed = s.ledger.A_at(ell);
    check.ok = check.norm_chart0 <= check.allowed && check.norm_chart1 <= check.allowed;
    next.bounds.push_back(check);
    return next;
}

LinearizationResult linearize(const Atlas& a, int N,
                              const std::optional<Rational>& r_probe) {
    if (N < 1) throw domain_error("linearize: order must be ≥ 1");
    if (N > a.N_w)
        throw precondition_error("linearize: order exceeds the fiber truncation");
    NormalBundleReport nb = normal_bundle_class(a);
    if (!nb.trivial()) throw not_normalizable_error(nb);

    LinearizationState state = linearize_start(normalize(a), N, r_probe);
    while (state.order < N) state = linearize_step(state);

    // Chart 1: w₁ = u + ∑ F_{1,ν}·u^ν, solved by reversion.
    MSeries phi1(N);
    phi1.set_coeff(1, LSeries::one());
    for (int nu = 2; nu <= N; ++nu) phi1.set_coeff(nu, state.F1[static_cast<size_t>(nu)]);
    MSeries u1 = reversion(phi1);

    // Chart 0: same equation over BSeries coefficients, then transported to
    // the overlap through (X, Y) and w₀∘T.
    WSeriesB phi0(N);
    phi0.set_coeff(1, BSeries::one());
    for (int nu = 2; nu <= N; ++nu) phi0.set_coeff(nu, state.F0[static_cast<size_t>(nu)]);
    WSeriesB rev0 = reversion(phi0);

    MSeries W0(N);
    W0.set_coeff(1, LSeries::one());
    for (int nu = 2; nu <= std::min(N, state.base.max_order()); ++nu)
        W0.set_coeff(nu, state.base.f_at(nu));

    MSeries u0(N);
    MSeries W0_pow(N);
    W0_pow.set_coeff(0, LSeries::one());
    for (int nu = 1; nu <= N; ++nu) {
        W0_pow = W0_pow * W0;
        const BSeries& c = rev0.coeff(nu);
        if (c.is_zero()) continue;
        MSeries coeff_overlap =
            subst_xy(c, state.atlas.X_trans.truncated(N), state.atlas.Y_trans.truncated(N));
        u0 = u0 + coeff_overlap * W0_pow;
    }

    if (!(u0 == u1))
        throw atlas_inconsistency_error(
            "linearization overlap mismatch: u₀ ≠ u₁ to the requested order");

    LinearizationResult result;
    result.u0 = std::move(u0);
    result.u1 = std::move(u1);
    result.agreement_order = N;
    result.ledger = state.ledger;
    result.radius_bound = radius_estimate(state.ledger.A);
    result.bounds = state.bounds;
    for (const auto& b : result.bounds) result.bounds_ok = result.bounds_ok && b.ok;
    return result;
}

}  // namespace ueda
