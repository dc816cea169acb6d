#ifndef ZETAFORGE_REVERSION_HPP
#define ZETAFORGE_REVERSION_HPP

#include "zetaforge/constants.hpp"
#include "zetaforge/power_series.hpp"
#include "zetaforge/specials.hpp"

namespace zetaforge {

// Compositional inverse with the two routes cross-checked.
inline PowerSeries revert_series(const PowerSeries& f, size_t order) {
    PowerSeries a = revert_lagrange(f, order);
    PowerSeries b = revert_newton(f, order);
    long check_digits = static_cast<long>(a.bits() / 3.33) - 5;
    Real tol("1e-" + std::to_string(std::max<long>(check_digits, 5)), 64);
    for (size_t k = 1; k <= order; ++k) {
        Real sc = abs(a[k]) > 1 ? abs(a[k]) : Real(1, a.bits());
        if (abs(a[k] - b[k]) > tol * sc)
            throw InconsistencyError("revert_series: Lagrange and Newton routes disagree at order " +
                                     std::to_string(k));
    }
    return a;
}

// Taylor coefficients of the zeta(3)-generating map
//   h(x) = (1/7)(pi x - x^2/4) + (2/7) sum_j eta(2j)/pi^(2j)
//          (pi (x/2)^(2j+1)/(2j+1) - (x/2)^(2j+2)/(2j+2)) * 2,
// i.e. h(x) = 2 f(x/2) for the csc-kernel antiderivative f; h(pi) -> zeta(3)
// and the reverted series evaluated at zeta(3) converges to pi.
inline PowerSeries zeta3_generating_series(size_t order, const PrecisionContext& ctx) {
    long wb = ctx.bits() + 32;
    PowerSeries h = PowerSeries::zero(order, wb);
    Real pi = const_pi(ctx).rounded(wb);
    if (order >= 1) h[1] = pi / 7;
    if (order >= 2) h[2] = Real(-1, wb) / 28;
    PrecisionContext ectx(ctx.digits(), ctx.guard() + 10);
    for (size_t j = 1; 2 * j + 1 <= order; ++j) {
        Real eta = eta_ref(static_cast<long>(2 * j), ectx).rounded(wb);
        Real common = 2 * eta / (7 * pow(pi, static_cast<long>(2 * j - 1)));
        // extra 2^-(k-1) from the half-argument scaling of x^k
        h[2 * j + 1] = ldexp(common / static_cast<long>(2 * j + 1), -static_cast<long>(2 * j));
        if (2 * j + 2 <= order)
            h[2 * j + 2] =
                -ldexp(common / (pi * static_cast<long>(2 * j + 2)), -static_cast<long>(2 * j + 1));
    }
    return h;
}

// pi as a power series in zeta(3): revert the generating series and evaluate.
inline Real pi_from_zeta3(size_t order, const PrecisionContext& ctx) {
    if (order < 2) throw DomainError("pi_from_zeta3: order must be >= 2");
    PowerSeries g = revert_series(zeta3_generating_series(order, ctx), order);
    return g.eval(zeta_ref(3, ctx).rounded(g.bits())).rounded(ctx.bits());
}

// Centered variant built on the Euler-number expansion of the csc kernel
// about pi/2: F(u) = (1/7)(pi^2 u/4 + sum_j (-1)^j/(2j+1)
// (pi^2 E_2j/(4(2j)!) + E_(2j-2)/(2j-2)!) u^(2j+1)), with
// pi = pi/2 + F^(-1)(zeta(3)/2) at u = x - pi/2.
inline PowerSeries zeta3_centered_series(size_t order, const PrecisionContext& ctx) {
    long wb = ctx.bits() + 32;
    PowerSeries f = PowerSeries::zero(order, wb);
    Real pi = const_pi(ctx).rounded(wb);
    Real pi2 = pi * pi;
    if (order >= 1) f[1] = pi2 / 28;
    for (size_t j = 1; 2 * j + 1 <= order; ++j) {
        Real e2j(euler_number(static_cast<long>(2 * j)), wb);
        Real e2jm2(euler_number(static_cast<long>(2 * j - 2)), wb);
        Real coeff = pi2 * e2j / (4 * Real(factorial(static_cast<unsigned long>(2 * j)), wb)) +
                     e2jm2 / Real(factorial(static_cast<unsigned long>(2 * j - 2)), wb);
        coeff /= static_cast<long>(2 * j + 1);
        if (j % 2 == 1) coeff.neg();
        f[2 * j + 1] = coeff / 7;
    }
    return f;
}

inline Real pi_from_zeta3_centered(size_t order, const PrecisionContext& ctx) {
    if (order < 1) throw DomainError("pi_from_zeta3_centered: order must be >= 1");
    PowerSeries g = revert_series(zeta3_centered_series(order, ctx), order);
    long wb = g.bits();
    Real z3_half = ldexp(zeta_ref(3, ctx).rounded(wb), -1);
    Real pi_half = ldexp(const_pi(ctx).rounded(wb), -1);
    return (pi_half + g.eval(z3_half)).rounded(ctx.bits());
}

} // namespace zetaforge

#endif
