#include "ueda/lseries.hpp"

#include <algorithm>

#include "ueda/errors.hpp"

namespace ueda {

void LSeries::normalize() {
    size_t drop_front = 0;
    while (drop_front < c_.size() && c_[drop_front].is_zero()) ++drop_front;
    if (drop_front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    size_t last = c_.size();
    while (last > drop_front && c_[last - 1].is_zero()) --last;
    if (drop_front > 0 || last < c_.size()) {
        c_ = std::vector<Scalar>(c_.begin() + static_cast<long>(drop_front),
                                 c_.begin() + static_cast<long>(last));
        lo_ += static_cast<int>(drop_front);
    }
}

LSeries LSeries::monomial(int exponent, Scalar value) {
    LSeries s;
    if (!value.is_zero()) {
        s.lo_ = exponent;
        s.c_.push_back(std::move(value));
    }
    return s;
}

LSeries LSeries::from_coeffs(int lo, std::vector<Scalar> coeffs) {
    LSeries s;
    s.lo_ = lo;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

bool LSeries::is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0].is_one(); }

Scalar LSeries::coeff(int exponent) const {
    if (is_zero() || exponent < lo() || exponent > hi()) return Scalar();
    return c_[static_cast<size_t>(exponent - lo_)];
}

Scalar LSeries::coeff_checked(int exponent) const {
    if (is_zero()) return Scalar();
    if (exponent < lo() || exponent > hi())
        throw out_of_window_error("coefficient exponent " + std::to_string(exponent) +
                                  " outside window [" + std::to_string(lo()) + "," +
                                  std::to_string(hi()) + "]");
    return coeff(exponent);
}

LSeries LSeries::operator-() const {
    LSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

LSeries operator+(const LSeries& a, const LSeries& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    std::vector<Scalar> c(static_cast<size_t>(hi - lo + 1));
    for (int e = a.lo(); e <= a.hi(); ++e) c[static_cast<size_t>(e - lo)] += a.coeff(e);
    for (int e = b.lo(); e <= b.hi(); ++e) c[static_cast<size_t>(e - lo)] += b.coeff(e);
    return LSeries::from_coeffs(lo, std::move(c));
}

LSeries operator-(const LSeries& a, const LSeries& b) { return a + (-b); }

LSeries operator*(const LSeries& a, const LSeries& b) {
    if (a.is_zero() || b.is_zero()) return LSeries();
    int lo = a.lo() + b.lo();
    int hi = a.hi() + b.hi();
    std::vector<Scalar> c(static_cast<size_t>(hi - lo + 1));
    for (int i = a.lo(); i <= a.hi(); ++i) {
        const Scalar& ai = a.coeff(i);
        if (ai.is_zero()) continue;
        for (int j = b.lo(); j <= b.hi(); ++j) {
            const Scalar& bj = b.coeff(j);
            if (bj.is_zero()) continue;
            c[static_cast<size_t>(i + j - lo)] += ai * bj;
        }
    }
    return LSeries::from_coeffs(lo, std::move(c));
}

bool operator==(const LSeries& a, const LSeries& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_;
}

LSeries LSeries::scaled(const Scalar& s) const {
    if (s.is_zero()) return LSeries();
    LSeries r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

LSeries LSeries::shifted(int k) const {
    LSeries r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
}

LSeries LSeries::truncated(int lo, int hi) const {
    if (is_zero() || lo > hi) return LSeries();
    int from = std::max(lo, this->lo());
    int to = std::min(hi, this->hi());
    if (from > to) return LSeries();
    std::vector<Scalar> c(c_.begin() + (from - lo_), c_.begin() + (to - lo_ + 1));
    return from_coeffs(from, std::move(c));
}

LSeries LSeries::part_below(int exponent) const {
    return is_zero() ? LSeries() : truncated(lo(), exponent - 1);
}

LSeries LSeries::part_above(int exponent) const {
    return is_zero() ? LSeries() : truncated(exponent + 1, hi());
}

LSeries LSeries::flipped() const {
    if (is_zero()) return LSeries();
    std::vector<Scalar> c(c_.rbegin(), c_.rend());
    return from_coeffs(-hi(), std::move(c));
}

Rational LSeries::circle_norm(const Rational& r) const {
    if (sgn(r) <= 0) throw domain_error("circle_norm: radius must be positive");
    Rational acc(0);
    for (int e = lo_min(); !is_zero() && e <= hi(); ++e)
        acc += coeff(e).abs_upper() * rat_pow(r, e);
    return acc;
}

LSeries lseries_from_map(const std::map<int, Scalar>& m) {
    if (m.empty()) return LSeries();
    int lo = m.begin()->first;
    int hi = m.rbegin()->first;
    std::vector<Scalar> c(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, v] : m) c[static_cast<size_t>(e - lo)] = v;
    return LSeries::from_coeffs(lo, std::move(c));
}

namespace {

// Power-series inverse: a has a(0) = a0 ≠ 0 and support in exponents ≥ 0.
// Exact recurrence b_m = -(∑_{k=1..m} a_k b_{m-k}) / a0 to the given order.
std::vector<Scalar> ps_inverse(const LSeries& a, int order) {
    Scalar a0 = a.coeff(0);
    std::vector<Scalar> b(static_cast<size_t>(order + 1));
    b[0] = Scalar::one() / a0;
    for (int m = 1; m <= order; ++m) {
        Scalar acc;
        for (int k = 1; k <= m; ++k) acc += a.coeff(k) * b[static_cast<size_t>(m - k)];
        b[static_cast<size_t>(m)] = -(acc / a0);
    }
    return b;
}

bool supported_nonneg(const LSeries& s) { return s.is_zero() || s.lo() >= 0; }
bool supported_nonpos(const LSeries& s) { return s.is_zero() || s.hi() <= 0; }

}  // namespace

LSeries inverse_unit_onesided(const LSeries& v, int window) {
    if (v.is_zero()) throw domain_error("inverse of zero series");
    if (v.coeff(0).is_zero())
        throw domain_error("inverse_unit_onesided: constant term vanishes");
    if (supported_nonneg(v))
        return LSeries::from_coeffs(0, ps_inverse(v, window));
    if (supported_nonpos(v))
        return LSeries::from_coeffs(0, ps_inverse(v.flipped(), window)).flipped();
    throw domain_error("inverse_unit_onesided: mixed Laurent tails");
}

LSeries log1p_onesided(const LSeries& h, int window) {
    if (h.is_zero()) return LSeries();
    bool pos = h.lo() >= 1;
    bool neg = h.hi() <= -1;
    if (!pos && !neg) throw domain_error("log1p_onesided: mixed Laurent tails");
    const LSeries a = pos ? h : h.flipped();
    // log(1+a)' = a'/(1+a); integrate the exact product coefficient-wise.
    std::vector<Scalar> inv = ps_inverse(LSeries::one() + a, window);
    std::vector<Scalar> ell(static_cast<size_t>(window + 1));
    for (int m = 1; m <= window; ++m) {
        Scalar acc;
        for (int k = 1; k <= m; ++k) {
            Scalar ak = a.coeff(k);
            if (ak.is_zero()) continue;
            acc += Scalar(make_rat(k)) * ak * inv[static_cast<size_t>(m - k)];
        }
        ell[static_cast<size_t>(m)] = acc * Scalar(make_rat(1, m));
    }
    LSeries r = LSeries::from_coeffs(0, std::move(ell));
    return pos ? r : r.flipped();
}

LSeries exp_onesided(const LSeries& a, int window) {
    if (a.is_zero()) return LSeries::one();
    if (!a.coeff(0).is_zero())
        throw domain_error("exp_onesided: nonzero constant term");
    bool pos = a.lo() >= 1;
    bool neg = a.hi() <= -1;
    if (!pos && !neg) throw domain_error("exp_onesided: mixed Laurent tails");
    const LSeries s = pos ? a : a.flipped();
    // b' = a'·b gives b_m = (1/m) ∑ k·a_k·b_{m-k}, exact.
    std::vector<Scalar> b(static_cast<size_t>(window + 1));
    b[0] = Scalar::one();
    for (int m = 1; m <= window; ++m) {
        Scalar acc;
        for (int k = 1; k <= m; ++k) {
            Scalar ak = s.coeff(k);
            if (ak.is_zero()) continue;
            acc += Scalar(make_rat(k)) * ak * b[static_cast<size_t>(m - k)];
        }
        b[static_cast<size_t>(m)] = acc * Scalar(make_rat(1, m));
    }
    LSeries r = LSeries::from_coeffs(0, std::move(b));
    return pos ? r : r.flipped();
}

}  // namespace ueda
