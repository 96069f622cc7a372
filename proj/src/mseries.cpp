#include "ueda/mseries.hpp"

#include <vector>

#include "ueda/errors.hpp"

namespace ueda {

MSeries fiber_inverse_pow(const MSeries& s, int n) {
    if (!s.coeff(0).is_zero())
        throw composition_domain_error("fiber_inverse_pow: constant term present");
    const int N = s.order();
    // 1/(1+s) via the Neumann sum; s is nilpotent to fiber order N.
    MSeries inv(N);
    inv.set_coeff(0, LSeries::one());
    MSeries power(N);
    power.set_coeff(0, LSeries::one());
    for (int k = 1; k <= N; ++k) {
        power = power * (-s);
        inv = inv + power;
    }
    return inv.pow(n);
}

MSeries subst_xy(const BSeries& F, const MSeries& X, const MSeries& Y) {
    const int N = std::min(X.order(), Y.order());
    if (!(X.coeff(0) == LSeries::monomial(2, Scalar::one())))
        throw atlas_inconsistency_error("subst_xy: X must equal ζ² on the curve");
    if (!(Y.coeff(0) == LSeries::monomial(3, Scalar::one())))
        throw atlas_inconsistency_error("subst_xy: Y must equal ζ³ on the curve");

    // X = ζ²(1+ξ), Y = ζ³(1+η) with fiber-positive ξ, η.
    MSeries xi(N), eta(N);
    for (int m = 1; m <= N; ++m) {
        xi.set_coeff(m, X.coeff(m).shifted(-2));
        eta.set_coeff(m, Y.coeff(m).shifted(-3));
    }

    int max_i = 0, max_j = 0;
    for (const auto& [k, v] : F.terms()) {
        max_i = std::max(max_i, k.first);
        max_j = std::max(max_j, k.second);
    }

    // ξ^a η^b for a+b ≤ N (higher powers vanish to fiber order N).
    std::vector<std::vector<MSeries>> pw(static_cast<size_t>(N) + 1);
    for (int a = 0; a <= N; ++a) pw[static_cast<size_t>(a)].resize(static_cast<size_t>(N - a) + 1);
    {
        MSeries xa(N);
        xa.set_coeff(0, LSeries::one());
        for (int a = 0; a <= N; ++a) {
            MSeries cur = xa;
            for (int b = 0; a + b <= N; ++b) {
                pw[static_cast<size_t>(a)][static_cast<size_t>(b)] = cur;
                if (a + b < N) cur = cur * eta;
            }
            if (a < N) xa = xa * xi;
        }
    }

    // Binomial tables up to the largest exponents in F.
    auto binom_row = [N](int n_top) {
        std::vector<Scalar> row(static_cast<size_t>(N) + 1);
        mpz_class b(1);
        for (int k = 0; k <= N; ++k) {
            row[static_cast<size_t>(k)] = Scalar(Rational(b));
            if (k < N) {
                b *= (n_top - k);
                if (b != 0) b /= (k + 1);
            }
            if (k >= n_top) {
                for (int k2 = k + 1; k2 <= N; ++k2) row[static_cast<size_t>(k2)] = Scalar();
                break;
            }
        }
        return row;
    };
    std::vector<std::vector<Scalar>> binom_i(static_cast<size_t>(max_i) + 1);
    std::vector<std::vector<Scalar>> binom_j(static_cast<size_t>(max_j) + 1);
    for (int i = 0; i <= max_i; ++i) binom_i[static_cast<size_t>(i)] = binom_row(i);
    for (int j = 0; j <= max_j; ++j) binom_j[static_cast<size_t>(j)] = binom_row(j);

    MSeries out(N);
    for (const auto& [k, v] : F.terms()) {
        const int i = k.first, j = k.second;
        const int shift = 2 * i + 3 * j;
        // (1+ξ)^i (1+η)^j = ∑ C(i,a)C(j,b) ξ^a η^b to fiber order N.
        for (int a = 0; a <= std::min(i, N); ++a) {
            const Scalar& ca = binom_i[static_cast<size_t>(i)][static_cast<size_t>(a)];
            if (ca.is_zero()) continue;
            for (int b = 0; b <= std::min(j, N - a); ++b) {
                const Scalar& cb = binom_j[static_cast<size_t>(j)][static_cast<size_t>(b)];
                if (cb.is_zero()) continue;
                const MSeries& term = pw[static_cast<size_t>(a)][static_cast<size_t>(b)];
                Scalar factor = v * ca * cb;
                for (int m = a + b; m <= N; ++m) {
                    if (term.coeff(m).is_zero()) continue;
                    out.set_coeff(
                        m, out.coeff(m) + term.coeff(m).scaled(factor).shifted(shift));
                }
            }
        }
    }
    return out;
}

}  // namespace ueda
