#ifndef ZETAFORGE_POWER_SERIES_HPP
#define ZETAFORGE_POWER_SERIES_HPP

#include <vector>

#include "zetaforge/real.hpp"

namespace zetaforge {

// Truncated power series with Real coefficients; all arithmetic is exact to
// the truncation order.  c[k] multiplies x^k.
class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(std::vector<Real> coeffs) : c_(std::move(coeffs)) {}
    static PowerSeries zero(size_t order, long bits) {
        return PowerSeries(std::vector<Real>(order + 1, Real(0, bits)));
    }

    size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
    const Real& operator[](size_t k) const { return c_[k]; }
    Real& operator[](size_t k) { return c_[k]; }
    const std::vector<Real>& coeffs() const { return c_; }
    long bits() const { return c_.empty() ? 64 : c_[0].prec(); }

    PowerSeries truncated(size_t order) const {
        PowerSeries r = zero(order, bits());
        for (size_t k = 0; k <= order && k < c_.size(); ++k) r.c_[k] = c_[k];
        return r;
    }

    Real eval(const Real& x) const {
        Real acc(0, result_prec(x, c_.empty() ? x : c_[0]));
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

private:
    std::vector<Real> c_;
};

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    size_t n = std::max(a.order(), b.order());
    PowerSeries r = PowerSeries::zero(n, std::max(a.bits(), b.bits()));
    for (size_t k = 0; k <= n; ++k) {
        if (k <= a.order()) r[k] += a[k];
        if (k <= b.order()) r[k] += b[k];
    }
    return r;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    size_t n = std::max(a.order(), b.order());
    PowerSeries r = PowerSeries::zero(n, std::max(a.bits(), b.bits()));
    for (size_t k = 0; k <= n; ++k) {
        if (k <= a.order()) r[k] += a[k];
        if (k <= b.order()) r[k] -= b[k];
    }
    return r;
}

inline PowerSeries mul(const PowerSeries& a, const PowerSeries& b, size_t order) {
    PowerSeries r = PowerSeries::zero(order, std::max(a.bits(), b.bits()));
    for (size_t i = 0; i <= std::min(order, a.order()); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; i + j <= order && j <= b.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline PowerSeries scale(const PowerSeries& a, const Real& s) {
    PowerSeries r = a;
    for (size_t k = 0; k <= r.order(); ++k) r[k] *= s;
    return r;
}

inline PowerSeries derivative(const PowerSeries& a) {
    if (a.order() == 0) return PowerSeries::zero(0, a.bits());
    PowerSeries r = PowerSeries::zero(a.order() - 1, a.bits());
    for (size_t k = 1; k <= a.order(); ++k) r[k - 1] = a[k] * static_cast<long>(k);
    return r;
}

// 1/a with a[0] != 0, by the convolution recurrence.
inline PowerSeries reciprocal(const PowerSeries& a, size_t order) {
    if (a[0].is_zero()) throw DomainError("reciprocal: constant term is zero");
    PowerSeries r = PowerSeries::zero(order, a.bits());
    Real inv0 = 1 / a[0];
    r[0] = inv0;
    for (size_t n = 1; n <= order; ++n) {
        Real acc(0, a.bits());
        for (size_t k = 1; k <= n && k <= a.order(); ++k) acc += a[k] * r[n - k];
        r[n] = -acc * inv0;
    }
    return r;
}

// a(b(x)) with b(0) = 0, Horner on series.
inline PowerSeries compose(const PowerSeries& a, const PowerSeries& b, size_t order) {
    if (!b[0].is_zero()) throw DomainError("compose: inner series must have zero constant term");
    PowerSeries acc = PowerSeries::zero(order, std::max(a.bits(), b.bits()));
    for (size_t k = a.order() + 1; k-- > 0;) {
        acc = mul(acc, b, order);
        acc[0] += a[k];
    }
    return acc;
}

// Compositional inverse by Lagrange inversion: g_n = [x^(n-1)] (x/f)^n / n.
// Requires f(0) = 0, f'(0) != 0; returns g with g(f(x)) = x + O(x^(N+1)).
inline PowerSeries revert_lagrange(const PowerSeries& f, size_t order) {
    if (!f[0].is_zero()) throw DomainError("revert: f(0) must be 0");
    if (f.order() < 1 || f[1].is_zero()) throw DomainError("revert: f'(0) must be nonzero");
    long bits = f.bits();
    // q = x/f as a series: shift f down one degree and invert
    PowerSeries shifted = PowerSeries::zero(order, bits);
    for (size_t k = 1; k <= f.order() && k <= order + 1; ++k) shifted[k - 1] = f[k];
    PowerSeries q = reciprocal(shifted, order);
    PowerSeries g = PowerSeries::zero(order, bits);
    PowerSeries qn(std::vector<Real>{Real(1, bits)});
    for (size_t n = 1; n <= order; ++n) {
        qn = mul(qn, q, order);
        g[n] = qn[n - 1] / static_cast<long>(n);
    }
    return g;
}

// Same inverse by Newton iteration on series: g <- g - (f(g) - x)/f'(g).
// The update doubles the number of correct coefficients each pass.
inline PowerSeries revert_newton(const PowerSeries& f, size_t order) {
    if (!f[0].is_zero()) throw DomainError("revert: f(0) must be 0");
    if (f.order() < 1 || f[1].is_zero()) throw DomainError("revert: f'(0) must be nonzero");
    long bits = f.bits();
    PowerSeries g = PowerSeries::zero(order, bits);
    g[1] = 1 / f[1];
    PowerSeries x = PowerSeries::zero(order, bits);
    x[1] = Real(1, bits);
    PowerSeries fp = derivative(f);
    size_t good = 1;
    while (good < order) {
        size_t target = std::min(order, 2 * good + 1);
        PowerSeries fg = compose(f.truncated(target), g, target);
        PowerSeries fpg = compose(fp.truncated(target), g, target);
        PowerSeries corr = mul(fg - x.truncated(target), reciprocal(fpg, target), target);
        g = g.truncated(target) - corr;
        good = target;
    }
    return g.truncated(order);
}

} // namespace zetaforge

#endif
