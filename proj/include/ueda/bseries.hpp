#pragma once

#include <map>
#include <utility>

#include "ueda/scalar.hpp"

namespace ueda {

/// Polynomial-truncated power series in two variables (x, y) to total degree
/// trunc_degree: data is valid for i + j ≤ trunc_degree, products keep the
/// tightest valid degree. Stored sparsely.
class BSeries {
  public:
    using Key = std::pair<int, int>;

    BSeries() = default;  // zero, fully exact
    explicit BSeries(int degree) : deg_(degree) {}

    static BSeries constant(Scalar v, int degree = kExactDegree);
    static BSeries monomial(int i, int j, Scalar v, int degree = kExactDegree);
    static BSeries one(int degree = kExactDegree) {
        return constant(Scalar::one(), degree);
    }

    /// Stored truncation horizon; exact polynomials use kExactDegree.
    int degree() const { return deg_; }
    static constexpr int kExactDegree = 1 << 24;

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;

    Scalar coeff(int i, int j) const;
    void set_coeff(int i, int j, Scalar v);

    BSeries operator-() const;
    friend BSeries operator+(const BSeries& a, const BSeries& b);
    friend BSeries operator-(const BSeries& a, const BSeries& b);
    friend BSeries operator*(const BSeries& a, const BSeries& b);
    friend bool operator==(const BSeries& a, const BSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BSeries& a, const BSeries& b) { return !(a == b); }

    BSeries scaled(const Scalar& s) const;
    BSeries truncated(int degree) const;
    BSeries pow(int n) const;

    Scalar constant_term() const { return coeff(0, 0); }

    /// ∑ |c_ij|·rx^i·ry^j — the polydisc coefficient-sum bound.
    Rational poly_norm(const Rational& rx, const Rational& ry) const;

    const std::map<Key, Scalar>& terms() const { return c_; }

  private:
    int deg_ = kExactDegree;
    std::map<Key, Scalar> c_;  // nonzero entries with i + j ≤ deg_
};

}  // namespace ueda
