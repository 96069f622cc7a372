#pragma once

#include <vector>

#include "ueda/errors.hpp"
#include "ueda/scalar.hpp"

namespace ueda {

/// Truncated power series ∑_{m=0}^{N} c_m t^m + O(t^{N+1}) over a commutative
/// coefficient ring R (Scalar, LSeries, BSeries). Operations keep the tightest
/// valid truncation order and never fabricate higher-order terms.
template <class R>
class FiberSeries {
  public:
    FiberSeries() : c_(1) {}  // zero at order 0
    explicit FiberSeries(int order) : c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw domain_error("FiberSeries: negative order");
    }
    explicit FiberSeries(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const R& coeff(int m) const {
        static const R zero{};
        if (m < 0 || m > order()) return zero;
        return c_[static_cast<size_t>(m)];
    }

    /// Access that treats the truncation order as a hard window.
    const R& coeff_checked(int m) const {
        if (m < 0 || m > order())
            throw out_of_window_error("fiber exponent " + std::to_string(m) +
                                      " outside truncation order " +
                                      std::to_string(order()));
        return c_[static_cast<size_t>(m)];
    }

    void set_coeff(int m, R value) {
        if (m < 0 || m > order())
            throw out_of_window_error("set_coeff outside truncation order");
        c_[static_cast<size_t>(m)] = std::move(value);
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    FiberSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        FiberSeries r(new_order);
        for (int m = 0; m <= new_order; ++m) r.c_[static_cast<size_t>(m)] = coeff(m);
        return r;
    }

    FiberSeries operator-() const {
        FiberSeries r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend FiberSeries operator+(const FiberSeries& a, const FiberSeries& b) {
        FiberSeries r(std::min(a.order(), b.order()));
        for (int m = 0; m <= r.order(); ++m)
            r.c_[static_cast<size_t>(m)] = a.coeff(m) + b.coeff(m);
        return r;
    }
    friend FiberSeries operator-(const FiberSeries& a, const FiberSeries& b) {
        return a + (-b);
    }
    friend FiberSeries operator*(const FiberSeries& a, const FiberSeries& b) {
        FiberSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (b.coeff(j).is_zero()) continue;
                r.c_[static_cast<size_t>(i + j)] =
                    r.c_[static_cast<size_t>(i + j)] + a.coeff(i) * b.coeff(j);
            }
        }
        return r;
    }

    friend bool operator==(const FiberSeries& a, const FiberSeries& b) {
        if (a.order() != b.order()) return false;
        for (int m = 0; m <= a.order(); ++m)
            if (!(a.coeff(m) == b.coeff(m))) return false;
        return true;
    }
    friend bool operator!=(const FiberSeries& a, const FiberSeries& b) {
        return !(a == b);
    }

    template <class S>
    FiberSeries scaled(const S& s) const {
        FiberSeries r = *this;
        for (auto& v : r.c_) v = v * s;
        return r;
    }

    /// t^k · this, dropping whatever leaves the truncation window.
    FiberSeries shifted_up(int k) const {
        FiberSeries r(order());
        for (int m = k; m <= order(); ++m) r.c_[static_cast<size_t>(m)] = coeff(m - k);
        return r;
    }

    FiberSeries pow(int n) const {
        if (n < 0) throw domain_error("FiberSeries::pow: negative exponent");
        FiberSeries acc(order());
        acc.c_[0] = ring_one();
        FiberSeries base = *this;
        while (n > 0) {
            if (n & 1) acc = acc * base;
            base = base * base;
            n >>= 1;
        }
        return acc;
    }

    static R ring_one() {
        if constexpr (std::is_same_v<R, Scalar>) return Scalar::one();
        else return R::one();
    }

    const std::vector<R>& coeffs() const { return c_; }

  private:
    std::vector<R> c_;
};

/// Substitution outer(inner) for inner with vanishing constant term.
template <class R>
FiberSeries<R> compose(const FiberSeries<R>& outer, const FiberSeries<R>& inner) {
    if (!inner.coeff(0).is_zero())
        throw composition_domain_error("compose: inner series has a constant term");
    int n = std::min(outer.order(), inner.order());
    FiberSeries<R> acc(n);
    // Horner from the top coefficient down.
    for (int m = outer.order(); m >= 0; --m) {
        acc = acc * inner;
        if (!outer.coeff(m).is_zero()) {
            acc.set_coeff(0, acc.coeff(0) + outer.coeff(m));
        }
    }
    return acc;
}

/// Compositional inverse of s = t + O(t²) with unit linear coefficient:
/// returns r with compose(s, r) = t to the truncation order.
template <class R>
FiberSeries<R> reversion(const FiberSeries<R>& s) {
    if (s.order() < 1 || !s.coeff(0).is_zero())
        throw normalization_error("reversion: series must vanish at order 0");
    bool lead_is_one;
    if constexpr (std::is_same_v<R, Scalar>) lead_is_one = s.coeff(1).is_one();
    else lead_is_one = s.coeff(1).is_one();
    if (!lead_is_one)
        throw normalization_error("reversion: linear coefficient must be exactly 1");
    const int n = s.order();
    FiberSeries<R> r(n);
    r.set_coeff(1, FiberSeries<R>::ring_one());
    for (int m = 2; m <= n; ++m) {
        // With r correct below order m, [s(r)]_m is the defect; subtract it.
        FiberSeries<R> err = compose(s.truncated(m), r.truncated(m));
        r.set_coeff(m, -err.coeff(m));
    }
    return r;
}

}  // namespace ueda
