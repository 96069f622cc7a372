#pragma once

#include <map>
#include <vector>

#include "ueda/scalar.hpp"

namespace ueda {

/// Finitely supported Laurent series in the normalization variable ζ.
/// The window [lo(), hi()] is the support hull; arithmetic is exact and
/// computes the tightest valid window (hull for add, sum for mul). Working
/// windows are applied explicitly with truncated().
class LSeries {
  public:
    LSeries() = default;  // zero

    static LSeries monomial(int exponent, Scalar value);
    static LSeries constant(Scalar value) { return monomial(0, std::move(value)); }
    static LSeries one() { return constant(Scalar::one()); }
    static LSeries from_coeffs(int lo, std::vector<Scalar> coeffs);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    /// Support window; meaningful only when nonzero.
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }

    Scalar coeff(int exponent) const;

    /// Coefficient access that treats the support window as the declared one.
    Scalar coeff_checked(int exponent) const;

    LSeries operator-() const;
    friend LSeries operator+(const LSeries& a, const LSeries& b);
    friend LSeries operator-(const LSeries& a, const LSeries& b);
    friend LSeries operator*(const LSeries& a, const LSeries& b);
    friend bool operator==(const LSeries& a, const LSeries& b);
    friend bool operator!=(const LSeries& a, const LSeries& b) { return !(a == b); }

    LSeries scaled(const Scalar& s) const;
    LSeries shifted(int k) const;  // multiplication by ζ^k

    /// Keeps exponents in [lo, hi] only.
    LSeries truncated(int lo, int hi) const;
    LSeries part_below(int exponent) const;  // exponents < exponent
    LSeries part_above(int exponent) const;  // exponents > exponent
    LSeries part_at_most(int exponent) const { return truncated(lo_min(), exponent); }
    LSeries part_at_least(int exponent) const { return truncated(exponent, hi_max()); }

    /// ζ ↦ ζ⁻¹ (negates every exponent).
    LSeries flipped() const;

    /// ∑ |c_m|·r^m — an exact upper bound for sup_{|ζ|=r} of the stored part.
    Rational circle_norm(const Rational& r) const;

    const std::vector<Scalar>& coeffs() const { return c_; }

  private:
    int lo_min() const { return is_zero() ? 0 : lo(); }
    int hi_max() const { return is_zero() ? 0 : hi(); }
    void normalize();

    int lo_ = 0;
    std::vector<Scalar> c_;  // exponent lo_ + k  ->  c_[k]; trimmed at both ends
};

/// Builds from sparse exponent/value pairs.
LSeries lseries_from_map(const std::map<int, Scalar>& m);

/// Multiplicative inverse of a one-sided unit, exact per coefficient, with
/// support cut at the working window [-window, window]. The input must have a
/// nonzero term at its extreme-toward-zero end and support entirely in
/// exponents ≥ 0 or entirely ≤ 0; mixed tails are rejected.
LSeries inverse_unit_onesided(const LSeries& v, int window);

/// log(1 + h) for one-sided h (support all ≥ 1 or all ≤ -1), exact per
/// coefficient, cut at [-window, window].
LSeries log1p_onesided(const LSeries& h, int window);

/// exp(a) for one-sided a with no constant term, exact per coefficient,
/// cut at [-window, window].
LSeries exp_onesided(const LSeries& a, int window);

}  // namespace ueda
