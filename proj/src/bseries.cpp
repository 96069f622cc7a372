#include "ueda/bseries.hpp"

#include <algorithm>

#include "ueda/errors.hpp"

namespace ueda {

BSeries BSeries::constant(Scalar v, int degree) {
    BSeries s(degree);
    if (!v.is_zero()) s.c_[{0, 0}] = std::move(v);
    return s;
}

BSeries BSeries::monomial(int i, int j, Scalar v, int degree) {
    if (i < 0 || j < 0) throw domain_error("BSeries::monomial: negative exponent");
    BSeries s(degree);
    if (!v.is_zero() && i + j <= degree) s.c_[{i, j}] = std::move(v);
    return s;
}

bool BSeries::is_one() const {
    return c_.size() == 1 && c_.begin()->first == Key{0, 0} &&
           c_.begin()->second.is_one();
}

Scalar BSeries::coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? Scalar() : it->second;
}

void BSeries::set_coeff(int i, int j, Scalar v) {
    if (i < 0 || j < 0) throw domain_error("BSeries::set_coeff: negative exponent");
    if (i + j > deg_)
        throw out_of_window_error("BSeries::set_coeff beyond truncation degree");
    if (v.is_zero())
        c_.erase({i, j});
    else
        c_[{i, j}] = std::move(v);
}

BSeries BSeries::operator-() const {
    BSeries r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

BSeries operator+(const BSeries& a, const BSeries& b) {
    BSeries r(std::min(a.deg_, b.deg_));
    for (const auto& [k, v] : a.c_)
        if (k.first + k.second <= r.deg_) r.c_[k] = v;
    for (const auto& [k, v] : b.c_) {
        if (k.first + k.second > r.deg_) continue;
        auto [it, inserted] = r.c_.try_emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) r.c_.erase(it);
        }
    }
    return r;
}

BSeries operator-(const BSeries& a, const BSeries& b) { return a + (-b); }

BSeries operator*(const BSeries& a, const BSeries& b) {
    BSeries r(std::min(a.deg_, b.deg_));
    for (const auto& [ka, va] : a.c_) {
        for (const auto& [kb, vb] : b.c_) {
            int i = ka.first + kb.first;
            int j = ka.second + kb.second;
            if (i + j > r.deg_) continue;
            Scalar prod = va * vb;
            if (prod.is_zero()) continue;
            auto [it, inserted] = r.c_.try_emplace(BSeries::Key{i, j}, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    }
    return r;
}

BSeries BSeries::scaled(const Scalar& s) const {
    if (s.is_zero()) return BSeries(deg_);
    BSeries r = *this;
    for (auto& [k, v] : r.c_) v *= s;
    return r;
}

BSeries BSeries::truncated(int degree) const {
    BSeries r(std::min(deg_, degree));
    for (const auto& [k, v] : c_)
        if (k.first + k.second <= r.deg_) r.c_[k] = v;
    return r;
}

BSeries BSeries::pow(int n) const {
    if (n < 0) throw domain_error("BSeries::pow: negative exponent");
    BSeries acc = one(deg_);
    BSeries base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = (n >> 1) > 0 ? base * base : base;
        n >>= 1;
    }
    return acc;
}

Rational BSeries::poly_norm(const Rational& rx, const Rational& ry) const {
    if (sgn(rx) <= 0 || sgn(ry) <= 0)
        throw domain_error("poly_norm: radii must be positive");
    Rational acc(0);
    for (const auto& [k, v] : c_)
        acc += v.abs_upper() * rat_pow(rx, k.first) * rat_pow(ry, k.second);
    return acc;
}

}  // namespace ueda
