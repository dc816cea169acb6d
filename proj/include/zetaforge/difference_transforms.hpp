#ifndef ZETAFORGE_DIFFERENCE_TRANSFORMS_HPP
#define ZETAFORGE_DIFFERENCE_TRANSFORMS_HPP

#include <functional>
#include <vector>

#include "zetaforge/constants.hpp"
#include "zetaforge/specials.hpp"

namespace zetaforge {

// Numeric function of one Real argument, evaluated under a given context.
using RealFn = std::function<Real(const Real&, const PrecisionContext&)>;

enum class DiffDirection { forward, backward };

struct DifferenceSpec {
    DiffDirection direction = DiffDirection::forward;
    long order = 1;
    BigRat step = BigRat(1); // h > 0

    DifferenceSpec() = default;
    DifferenceSpec(DiffDirection d, long n, BigRat h)
        : direction(d), order(n), step(std::move(h)) {
        if (order < 0 || order > 10000) throw DomainError("DifferenceSpec: order out of range");
        if (sgn(step) <= 0) throw DomainError("DifferenceSpec: step must be positive");
    }
};

namespace detail {

inline std::vector<BigInt> binomial_row(long n) {
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = 1;
    for (long j = 1; j <= n; ++j)
        row[static_cast<size_t>(j)] = row[static_cast<size_t>(j - 1)] * (n - j + 1) / j;
    return row;
}

// C(n, n/2) ~ 2^n loses ~0.302 n decimal digits to cancellation.
inline PrecisionContext elevated_for_order(const PrecisionContext& ctx, long n) {
    return ctx.elevated(static_cast<int>(std::ceil(0.31 * static_cast<double>(n))) + 10);
}

} // namespace detail

// Order-n forward/backward difference as the exact-binomial alternating sum,
// summed at elevated internal precision.
inline Real nth_difference(const RealFn& f, const Real& x, const DifferenceSpec& spec,
                           const PrecisionContext& ctx) {
    auto ectx = detail::elevated_for_order(ctx, spec.order);
    long wb = ectx.bits();
    auto row = detail::binomial_row(spec.order);
    Real h(spec.step, wb);
    Real xw = x.rounded(wb);
    Real acc(0, wb);
    for (long k = 0; k <= spec.order; ++k) {
        Real node = (spec.direction == DiffDirection::forward) ? xw + k * h : xw - k * h;
        Real term = Real(row[static_cast<size_t>(k)], wb) * f(node, ectx);
        acc += (k % 2 == 0) ? term : -term;
    }
    if (spec.direction == DiffDirection::forward && spec.order % 2 == 1) acc.neg();
    return acc.rounded(ctx.bits());
}

// Exact path: order-n difference of a polynomial (coefficients p[k] of x^k).
inline std::vector<BigRat> nth_difference_poly(const std::vector<BigRat>& p,
                                               const DifferenceSpec& spec) {
    auto row = detail::binomial_row(spec.order);
    std::vector<BigRat> acc(p.size(), BigRat(0));
    for (long k = 0; k <= spec.order; ++k) {
        BigRat shift = (spec.direction == DiffDirection::forward ? spec.step : -spec.step) * k;
        // q(x) = p(x + shift)
        std::vector<BigRat> q(p.size(), BigRat(0));
        for (size_t d = 0; d < p.size(); ++d) {
            if (p[d] == 0) continue;
            BigRat c(1);
            for (size_t i = 0; i <= d; ++i) {
                size_t pw = d - i;
                q[pw] += p[d] * BigRat(binomial(static_cast<unsigned long>(d),
                                                static_cast<unsigned long>(pw))) * c;
                c *= shift;
            }
        }
        BigRat w(row[static_cast<size_t>(k)]);
        if (k % 2 == 1) w = -w;
        for (size_t d = 0; d < p.size(); ++d) acc[d] += w * q[d];
    }
    if (spec.direction == DiffDirection::forward && spec.order % 2 == 1)
        for (auto& c : acc) c = -c;
    return acc;
}

// Closed form Delta_1^n sin(x) = (2 sin(1/2))^n sin(n(1+pi)/2 + x).
// The quarter-period jumps of the phase already carry the sign pattern; a
// further (-1)^floor(n/2) prefactor would flip n = 2,3 mod 4.
inline Real delta_sin_closed(long n, const Real& x, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    Real pi = const_pi(ctx);
    Real half = ldexp(Real(1, wb), -1);
    Real amp = pow(2 * sin(half), n);
    Real phase = Real(n, wb) * (1 + pi) / 2 + x.rounded(wb);
    return amp * sin(phase);
}

// Closed form nabla_1^n exp(x) = (1 - 1/e)^n exp(x); the base is positive
// (nabla exp(x) = exp(x)(1 - exp(-1))), so no alternating sign appears.
inline Real nabla_exp_closed(long n, const Real& x, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    Real xw = x.rounded(wb);
    return pow(1 - exp(Real(-1, wb)), n) * exp(xw);
}

// sum_{j=1}^n (-1)^(j-1) C(n,j) f(k + j h) = f(k) + (-1)^(n+1) Delta_h^n f(k)
inline Real binomial_accel(const RealFn& f, const Real& k, const BigRat& h, long n,
                           const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("binomial_accel: n must be >= 1");
    auto ectx = detail::elevated_for_order(ctx, n);
    long wb = ectx.bits();
    auto row = detail::binomial_row(n);
    Real hw(h, wb);
    Real kw = k.rounded(wb);
    Real acc(0, wb);
    for (long j = 1; j <= n; ++j) {
        Real term = Real(row[static_cast<size_t>(j)], wb) * f(kw + j * hw, ectx);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc.rounded(ctx.bits());
}

inline RealFn zeta_fn() {
    return [](const Real& s, const PrecisionContext& c) { return zeta_ref(s, c); };
}

inline RealFn eta_fn() {
    return [](const Real& s, const PrecisionContext& c) { return eta_ref(s, c); };
}

inline Real zeta_binomial_accel(const Real& k, const BigRat& h, long n,
                                const PrecisionContext& ctx) {
    if (!(k > 1)) throw DomainError("zeta_binomial_accel: k must exceed 1");
    return binomial_accel(zeta_fn(), k, h, n, ctx);
}

inline Real eta_binomial_accel(const Real& k, const BigRat& h, long n,
                               const PrecisionContext& ctx) {
    if (!(k.sign() > 0)) throw DomainError("eta_binomial_accel: k must be positive");
    return binomial_accel(eta_fn(), k, h, n, ctx);
}

// sum_j (-1)^(j-1) C(n,j) zeta(ln(exp(k) + j h)); the log-shifted nodes pile
// up near k and the transform converges far faster than the plain shift.
inline Real zeta_log_shift_accel(const Real& k, const BigRat& h, long n,
                                 const PrecisionContext& ctx) {
    if (!(k > 1)) throw DomainError("zeta_log_shift_accel: k must exceed 1");
    auto ectx = detail::elevated_for_order(ctx, n);
    long wb = ectx.bits();
    Real ek = exp(k.rounded(wb));
    Real hw(h, wb);
    auto row = detail::binomial_row(n);
    Real acc(0, wb);
    for (long j = 1; j <= n; ++j) {
        Real arg = log(ek + j * hw);
        Real term = Real(row[static_cast<size_t>(j)], wb) * zeta_ref(arg, ectx);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc.rounded(ctx.bits());
}

// Product form: exp of the binomial-accelerated log zeta, i.e. the quotient
// prod_{j odd} zeta^C(n,j) / prod_{j even} zeta^C(n,j).
inline Real zeta_product_accel(const Real& k, const BigRat& h, long n,
                               const PrecisionContext& ctx) {
    if (!(k > 1)) throw DomainError("zeta_product_accel: k must exceed 1");
    RealFn lnzeta = [](const Real& s, const PrecisionContext& c) {
        return log(zeta_ref(s, c));
    };
    auto ectx = detail::elevated_for_order(ctx, n);
    return exp(binomial_accel(lnzeta, k, h, n, ectx)).rounded(ctx.bits());
}

// ---------------------------------------------------------------------------
// Stirling finite-difference identity (exact polynomial arithmetic)
// ---------------------------------------------------------------------------

struct StirlingIdentityRecord {
    long n = 0, k = 0;
    std::vector<BigRat> lhs; // sum_{j=1}^n (-1)^(j+1) C(n,j) (x+j)^k
    std::vector<BigRat> rhs; // x^k [+ (-1)^(n+1) n! sum C(k,i) S(k-i,n) x^i]
    bool holds = false;
};

inline StirlingIdentityRecord stirling_difference_identity(long n, long k) {
    if (n < 1 || k < 0) throw DomainError("stirling_difference_identity: need n >= 1, k >= 0");
    StirlingIdentityRecord rec;
    rec.n = n;
    rec.k = k;
    auto row = detail::binomial_row(n);
    rec.lhs.assign(static_cast<size_t>(k) + 1, BigRat(0));
    for (long j = 1; j <= n; ++j) {
        BigRat w(row[static_cast<size_t>(j)]);
        if (j % 2 == 0) w = -w;
        BigInt jp(1); // j^(k-i)
        for (long i = k; i >= 0; --i) {
            rec.lhs[static_cast<size_t>(i)] +=
                w * BigRat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)) * jp);
            jp *= j;
        }
    }
    rec.rhs.assign(static_cast<size_t>(k) + 1, BigRat(0));
    rec.rhs[static_cast<size_t>(k)] = 1;
    if (k >= n) {
        BigRat nf(factorial(static_cast<unsigned long>(n)));
        if (n % 2 == 0) nf = -nf; // (-1)^(n+1) n!
        for (long i = 0; i <= k - n; ++i)
            rec.rhs[static_cast<size_t>(i)] +=
                nf * BigRat(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(i)) *
                            stirling2(k - i, n));
    }
    rec.holds = (rec.lhs == rec.rhs);
    return rec;
}

// ---------------------------------------------------------------------------
// mod-1 summation: only fractional parts are accumulated
// ---------------------------------------------------------------------------

// generator(j) yields the signed j-th term; the accumulator works mod 1 and
// returns the representative in [0,1).
using TermGenerator = std::function<Real(long, const PrecisionContext&)>;

inline Real mod1_sum(const TermGenerator& gen, long n, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    Real acc(0, wb);
    for (long j = 1; j <= n; ++j) {
        Real t = gen(j, ctx);
        Real m = frac(abs(t));
        acc += (t.sign() >= 0) ? m : -m;
        acc = frac(acc);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Step-sequence generalizations of the acceleration
// ---------------------------------------------------------------------------

struct StepSequence {
    enum class Kind { inverse_power, exp_decay, logistic, geometric_half };
    Kind kind = Kind::inverse_power;
    long m = 2; // exponent for inverse_power; requires m > 1 for boundedness

    static StepSequence inverse_power(long m) {
        if (m <= 1) throw DomainError("StepSequence: inverse_power needs m > 1");
        return StepSequence{Kind::inverse_power, m};
    }
    static StepSequence exp_decay() { return StepSequence{Kind::exp_decay, 0}; }
    static StepSequence logistic() { return StepSequence{Kind::logistic, 0}; }
    static StepSequence geometric_half() { return StepSequence{Kind::geometric_half, 0}; }

    // offset_j (before scaling by h); strictly increasing and bounded
    Real offset(long j, const PrecisionContext& ctx) const {
        long wb = ctx.bits();
        switch (kind) {
            case Kind::inverse_power: {
                Real acc(0, wb);
                for (long i = 1; i <= j; ++i) acc += pow(Real(i, wb), -m);
                return acc;
            }
            case Kind::exp_decay: {
                Real acc(0, wb);
                for (long i = 1; i <= j; ++i) acc += exp(Real(-i, wb));
                return acc;
            }
            case Kind::logistic:
                // anchored at zero: the raw logistic has offset 1/2 already at
                // j = 0, which would shift the limit to f(x + h/2)
                return 1 / (1 + exp(Real(-j, wb))) - ldexp(Real(1, wb), -1);
            case Kind::geometric_half:
                return 1 - ldexp(Real(1, wb), -j);
        }
        return Real(0, wb);
    }
};

inline Real step_sequence_accel(const RealFn& f, const Real& x, const BigRat& h,
                                const StepSequence& seq, long n, const PrecisionContext& ctx) {
    if (n < 1) throw DomainError("step_sequence_accel: n must be >= 1");
    auto ectx = detail::elevated_for_order(ctx, n);
    long wb = ectx.bits();
    auto row = detail::binomial_row(n);
    Real hw(h, wb);
    Real xw = x.rounded(wb);
    // cumulative offsets share their prefix sums
    std::vector<Real> offs;
    offs.reserve(static_cast<size_t>(n));
    if (seq.kind == StepSequence::Kind::inverse_power || seq.kind == StepSequence::Kind::exp_decay) {
        Real acc(0, wb);
        for (long j = 1; j <= n; ++j) {
            acc += (seq.kind == StepSequence::Kind::inverse_power) ? pow(Real(j, wb), -seq.m)
                                                                   : exp(Real(-j, wb));
            offs.push_back(acc);
        }
    } else {
        for (long j = 1; j <= n; ++j) offs.push_back(seq.offset(j, ectx));
    }
    Real acc(0, wb);
    for (long j = 1; j <= n; ++j) {
        Real term = Real(row[static_cast<size_t>(j)], wb) *
                    f(xw + hw * offs[static_cast<size_t>(j - 1)], ectx);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc.rounded(ctx.bits());
}

// sum_{j=1}^n (-1)^(j+1) C(n,j) x^(1-j) -> x for x > 1;
// with exponent 1+j instead, -> x for 0 < x < 1.
enum class PowerIdentityForm { descending, ascending };

inline Real power_identity_check(const Real& x, long n, PowerIdentityForm form,
                                 const PrecisionContext& ctx) {
    auto ectx = detail::elevated_for_order(ctx, n);
    long wb = ectx.bits();
    auto row = detail::binomial_row(n);
    Real xw = x.rounded(wb);
    Real acc(0, wb);
    for (long j = 1; j <= n; ++j) {
        long e = (form == PowerIdentityForm::descending) ? 1 - j : 1 + j;
        Real term = Real(row[static_cast<size_t>(j)], wb) * pow(xw, e);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc.rounded(ctx.bits());
}

// ---------------------------------------------------------------------------
// Numeric experiments (no acceptance weight)
// ---------------------------------------------------------------------------

// Weighted acceleration with f(j) = ((x^(j+1)-1)/((x-1) y^j))^s; converges to
// eta(k) for suitable (x, y, s).  Stated without rigor in the source
// material; exposed as an experiment only.
inline Real eta_weight_experiment(long k, const Real& x, const Real& y, const Real& s, long n,
                                  const PrecisionContext& ctx) {
    auto ectx = detail::elevated_for_order(ctx, n);
    long wb = ectx.bits();
    auto row = detail::binomial_row(n);
    Real acc(0, wb);
    Real xw = x.rounded(wb), yw = y.rounded(wb), sw = s.rounded(wb);
    for (long j = 1; j <= n; ++j) {
        Real geo = (pow(xw, j + 1) - 1) / ((xw - 1) * pow(yw, j));
        Real term = Real(row[static_cast<size_t>(j)], wb) * pow(geo, sw) *
                    eta_ref(Real(k + j, wb), ectx);
        acc += (j % 2 == 1) ? term : -term;
    }
    return acc.rounded(ctx.bits());
}

// Downward nodes toward the pole at s = 1:
// zeta(k) ~ sum_{j=1}^{n-1} (-1)^(j-1) C(n-1,j) zeta(k - j(k-1)/n) - 1/(k-1).
inline Real zeta_simple_pole_experiment(long k, long n, const PrecisionContext& ctx) {
    if (k < 2 || n < 2) throw DomainError("zeta_simple_pole_experiment: need k >= 2, n >= 2");
    auto ectx = detail::elevated_for_order(ctx, n);
    long wb = ectx.bits();
    auto row = detail::binomial_row(n - 1);
    Real acc(0, wb);
    Real kw(k, wb);
    for (long j = 1; j <= n - 1; ++j) {
        Real arg = kw - Real(j * (k - 1), wb) / n;
        Real term = Real(row[static_cast<size_t>(j)], wb) * zeta_ref(arg, ectx);
        acc += (j % 2 == 1) ? term : -term;
    }
    acc -= Real(1, wb) / (k - 1);
    return acc.rounded(ctx.bits());
}

} // namespace zetaforge

#endif
