#include "ueda/cusp.hpp"

#include "ueda/errors.hpp"

namespace ueda {

CuspFunction::CuspFunction(PSeries s) : series(std::move(s)) {
    if (!is_cusp_member(series))
        throw cusp_constraint_error("ζ¹-coefficient must vanish on the cusp chart");
}

ChartRadii::ChartRadii(Rational e) : eps0(std::move(e)) {
    if (sgn(eps0) <= 0) throw domain_error("ChartRadii: eps0 must be positive");
}

bool is_cusp_member(const PSeries& s) { return s.coeff(1).is_zero(); }

PSeries pullback(const BSeries& F) {
    int zeta_order = F.degree() >= BSeries::kExactDegree ? 0 : 2 * F.degree() + 1;
    for (const auto& [k, v] : F.terms())
        zeta_order = std::max(zeta_order, 2 * k.first + 3 * k.second);
    return pullback(F, zeta_order);
}

PSeries pullback(const BSeries& F, int zeta_order) {
    PSeries r(zeta_order);
    for (const auto& [k, v] : F.terms()) {
        int e = 2 * k.first + 3 * k.second;
        if (e <= zeta_order) r.set_coeff(e, r.coeff(e) + v);
    }
    return r;
}

BSeries extend_to_V0(const CuspFunction& f) {
    // Default truncation degree: twice the ζ-truncation order.
    return extend_to_V0(f, 2 * f.order());
}

BSeries extend_to_V0(const CuspFunction& f, int degree) {
    BSeries F(degree);
    for (int n = 0; n <= f.order(); ++n) {
        const Scalar& a = f.series.coeff(n);
        if (a.is_zero()) continue;
        if (n == 0) {
            F.set_coeff(0, 0, a);
        } else if (n % 2 == 0) {
            F.set_coeff(n / 2, 0, a);  // a_{2m} ζ^{2m} -> x^m
        } else {
            F.set_coeff((n - 3) / 2, 1, a);  // a_{2m+1} ζ^{2m+1} -> x^{m-1} y
        }
    }
    return F;
}

std::pair<Rational, Rational> extension_bound_report(const CuspFunction& f,
                                                     const ChartRadii& radii) {
    BSeries F = extend_to_V0(f);
    Rational bound_F = F.poly_norm(radii.x_radius(), radii.y_radius());
    Rational bound_f = circle_norm(f.series, radii.eps0);
    return {bound_F, bound_f};
}

}  // namespace ueda
