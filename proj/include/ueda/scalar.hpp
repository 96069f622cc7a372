#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "ueda/errors.hpp"

namespace ueda {

using Rational = mpq_class;

/// Makes a canonical rational from an integer fraction.
inline Rational make_rat(long num, long den = 1) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Exact Gaussian rational: re + i*im with arbitrary-precision rational parts.
/// All field operations are exact; nothing ever rounds.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long n) : re(n), im(0) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    static Scalar one() { return Scalar(1); }
    static Scalar zero() { return Scalar(); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    /// Rational upper bound for |re + i*im|; exact 0 at 0.
    Rational abs_upper() const { return abs(re) + abs(im); }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw domain_error("Scalar division by zero");
        Rational n = b.re * b.re + b.im * b.im;
        return Scalar((a.re * b.re + a.im * b.im) / n,
                      (a.im * b.re - a.re * b.im) / n);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const {
        std::string s = re.get_str();
        if (sgn(im) != 0) s += (sgn(im) > 0 ? "+" : "") + im.get_str() + "i";
        return s;
    }
};

inline Scalar scalar_rat(long num, long den = 1) { return Scalar(make_rat(num, den)); }

/// r^e for integer e (negative allowed), exact.
inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (sgn(r) == 0) {
        if (e < 0) throw domain_error("rat_pow: 0 to a negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? r : Rational(1) / r;
    long n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

}  // namespace ueda
