#pragma once

#include <map>
#include <string>
#include <vector>

#include "ueda/cech.hpp"
#include "ueda/cusp.hpp"
#include "ueda/mseries.hpp"

namespace ueda {

/// Full two-chart neighborhood description of the cuspidal curve. Chart 0 is
/// the polydisc V₀ with coordinates (x, y) and defining function
/// w₀ = w0_unit·(y² − x³); chart 1 is U₁ × disc with fiber coordinate w₁.
/// X_trans/Y_trans express (x, y) on the overlap as series in w₁ with
/// Laurent-in-ζ coefficients; on the curve they restrict to (ζ², ζ³).
struct Atlas {
    ChartRadii radii;
    AnnulusWindow annulus;
    MSeries X_trans;
    MSeries Y_trans;
    BSeries w0_unit;
    int N_w = 0;
    int N_zeta = 0;

    /// Working window for the one-sided series expansions used by normalize.
    int work_window() const { return N_zeta + 12 * (N_w + 2); }
    /// BSeries horizon matching the working window under the (2,3)-weights.
    int work_degree() const { return (work_window() + 6 * N_w) / 2 + 2; }
};

/// w₀ ∘ T expanded in the fiber coordinate: c1·w₁ + ∑_{ν≥2} f_ν(ζ)·w₁^ν.
/// When normalized, c1 ≡ 1 and the f_ν are the overlap expansion data.
struct TransitionExpansion {
    LSeries c1;
    std::vector<LSeries> f;  // f[ν] for ν = 2..N_w; f[0], f[1] unused

    const LSeries& f_at(int nu) const;
    int max_order() const { return static_cast<int>(f.size()) - 1; }
};

/// Class of the normal bundle in Pic⁰(C) ≅ ℂ for this model: trivial iff
/// winding = 0 and pic0_class = 0.
struct NormalBundleReport {
    int winding = 0;
    Scalar pic0_class;

    bool trivial() const { return winding == 0 && pic0_class.is_zero(); }
};

struct not_normalizable_error : domain_error {
    NormalBundleReport report;
    explicit not_normalizable_error(NormalBundleReport r)
        : domain_error("normal bundle class is nontrivial: winding " +
                       std::to_string(r.winding) + ", class " + r.pic0_class.str()),
          report(std::move(r)) {}
};

/// Invariant check; each violation names the field and the failed condition.
std::vector<std::string> validate(const Atlas& a);

/// Expands w₀ ∘ T = w0_unit(X, Y)·(Y² − X³) in w₁ and reads off c1 and the
/// f_ν. The w₁⁰ term must vanish identically (the curve maps to the curve).
TransitionExpansion derive_w_transition(const Atlas& a);

/// Winding and Pic⁰-class of the leading transition coefficient c1. Requires
/// c1 = ζ^w·c·(1+h) with one-sided h certified nonvanishing on the annulus.
NormalBundleReport normal_bundle_class(const Atlas& a);
NormalBundleReport normal_bundle_class_of(const LSeries& c1, const AnnulusWindow& w);

/// Rewrites the atlas so the derived expansion has c1 ≡ 1, multiplying
/// w0_unit by the extension of the disc part of log c1 and rescaling w₁ by
/// the exterior part. Requires normal_bundle_class(a) = (0, 0).
Atlas normalize(const Atlas& a);

/// Atlas with X = ζ², Y = ζ³·sqrt(1 + w₁/ζ⁶) and w0_unit = 1, built so that
/// Y² − X³ = w₁ exactly to fiber order N_w: the trivial fibration model.
Atlas make_trivial_atlas(int N_w, int N_zeta);

/// Trivial model perturbed so the derived expansion is exactly
/// w₀ = w₁ + ∑ f_ν·w₁^ν for the given f_ν (ν = 2..N_w).
Atlas make_perturbed_atlas(int N_w, int N_zeta, const std::map<int, LSeries>& f_by_order);

/// Perturbation f_{order+1} = value·ζ^exponent, the CLI's `atlas gen perturbed`.
Atlas make_perturbed_atlas_simple(int N_w, int N_zeta, int order, const Scalar& value,
                                  int exponent = 1);

}  // namespace ueda
