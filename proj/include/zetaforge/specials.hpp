#ifndef ZETAFORGE_SPECIALS_HPP
#define ZETAFORGE_SPECIALS_HPP

#include <map>
#include <mutex>
#include <vector>

#include "zetaforge/constants.hpp"
#include "zetaforge/rational.hpp"
#include "zetaforge/real.hpp"

namespace zetaforge {

// ---------------------------------------------------------------------------
// Exact special numbers
// ---------------------------------------------------------------------------

namespace detail {

struct BernoulliCache {
    std::mutex mu;
    std::vector<BigRat> b; // b[m] = B_m, B_1 = -1/2
};

inline BernoulliCache& bernoulli_cache() {
    static BernoulliCache c;
    return c;
}

} // namespace detail

// Exact Bernoulli number B_m (B_1 = -1/2 convention).
// Recurrence sum_{k=0}^{m} C(m+1,k) B_k = 0.
inline BigRat bernoulli_any(long m) {
    if (m < 0) throw DomainError("bernoulli: m must be >= 0");
    auto& cache = detail::bernoulli_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto& b = cache.b;
    if (b.empty()) {
        b.push_back(BigRat(1));
        b.push_back(make_rat(-1, 2));
    }
    while (static_cast<long>(b.size()) <= m) {
        long n = static_cast<long>(b.size());
        if (n % 2 == 1 && n > 1) {
            b.push_back(BigRat(0));
            continue;
        }
        BigRat acc(0);
        for (long k = 0; k < n; ++k) {
            if (b[k] == 0) continue;
            acc += BigRat(binomial(static_cast<unsigned long>(n + 1),
                                   static_cast<unsigned long>(k))) * b[k];
        }
        acc /= BigRat(n + 1);
        b.push_back(-acc);
    }
    return b[m];
}

// Public contract: even m (plus B_0, B_1); odd m > 1 is a domain error.
inline BigRat bernoulli(long m) {
    if (m < 0) throw DomainError("bernoulli: m must be >= 0");
    if (m > 1 && m % 2 == 1)
        throw DomainError("bernoulli: odd index " + std::to_string(m) + " (value is 0)");
    return bernoulli_any(m);
}

// Exact secant-series Euler number E_m; 0 for odd m.
// Recurrence sum_{k=0}^{n} C(2n,2k) E_{2k} = 0.
inline BigInt euler_number(long m) {
    if (m < 0) throw DomainError("euler_number: m must be >= 0");
    if (m % 2 == 1) return BigInt(0);
    static std::mutex mu;
    static std::vector<BigInt> e{BigInt(1)}; // e[n] = E_{2n}
    std::lock_guard<std::mutex> lock(mu);
    long idx = m / 2;
    while (static_cast<long>(e.size()) <= idx) {
        long n = static_cast<long>(e.size());
        BigInt acc(0);
        for (long k = 0; k < n; ++k)
            acc += binomial(static_cast<unsigned long>(2 * n),
                            static_cast<unsigned long>(2 * k)) * e[k];
        e.push_back(-acc);
    }
    return e[idx];
}

// Stirling numbers of the second kind, S(n,k).
inline BigInt stirling2(long n, long k) {
    if (n < 0 || k < 0) throw DomainError("stirling2: negative argument");
    if (k > n) return BigInt(0);
    if (n == 0) return BigInt(k == 0 ? 1 : 0);
    static std::mutex mu;
    static std::vector<std::vector<BigInt>> table{{BigInt(1)}}; // table[n][k], k<=n
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(table.size()) <= n) {
        long r = static_cast<long>(table.size());
        std::vector<BigInt> row(static_cast<size_t>(r) + 1);
        row[0] = 0;
        for (long c = 1; c <= r; ++c) {
            BigInt up = (c <= r - 1) ? table[r - 1][c] : BigInt(0);
            row[c] = BigInt(c) * up + table[r - 1][c - 1];
        }
        table.push_back(std::move(row));
    }
    return table[n][k];
}

// ---------------------------------------------------------------------------
// zeta / eta reference oracle
// ---------------------------------------------------------------------------

namespace detail {

// Alternating-series acceleration with Chebyshev-style integer-free weights
// (algorithm 1 of Cohen, Rodriguez Villegas & Zagier 2000): for a totally
// monotonic sequence a_k, sum (-1)^k a_k with relative error ~ (3+sqrt 8)^-n.
// Terms supplied by a callable k -> a_k evaluated at `bits` precision.
template <typename TermFn>
Real alternating_accel(TermFn&& term, long n, long bits) {
    long wb = bits + 32;
    Real d = pow(3 + sqrt(Real(8, wb)), n);
    d = ldexp(d + 1 / d, -1);
    Real b(-1, wb), c = -d, s(0, wb);
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * term(k);
        // b *= (k+n)(k-n) / ((k+1/2)(k+1))
        b *= 2 * (k + n) * (k - n);
        b /= (2 * k + 1) * (k + 1);
    }
    return (s / d).rounded(bits);
}

inline long accel_terms(long decimal_digits) {
    // (3+sqrt8)^-n < 10^-(digits+4)
    return static_cast<long>(std::ceil((decimal_digits + 4) * 1.3077)) + 2;
}

inline Real eta_accel(const Real& s, long digits, long bits) {
    long n = accel_terms(digits);
    long wb = bits + 32;
    Real ms = -s.rounded(wb);
    return alternating_accel(
        [&](long k) {
            return pow(Real(k + 1, wb), ms);
        },
        n, bits);
}

struct ZetaCache {
    std::mutex mu;
    std::map<std::pair<long, long>, Real> zeta; // (integer s, bits) -> value
    std::map<std::pair<long, long>, Real> eta;
};

inline ZetaCache& zeta_cache() {
    static ZetaCache c;
    return c;
}

} // namespace detail

// eta(s) for s > 0, via accelerated alternating series.
inline Real eta_ref(const Real& s, const PrecisionContext& ctx) {
    if (!(s.sign() > 0)) throw DomainError("eta_ref: requires s > 0");
    int digits = ctx.digits() + ctx.guard();
    long bits = ctx.bits();
    bool integral = mpfr_integer_p(s.raw()) != 0 && s < 1000000L;
    long si = integral ? s.to_long() : 0;
    if (integral) {
        auto& c = detail::zeta_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.eta.find({si, bits});
        if (it != c.eta.end()) return it->second;
    }
    Real v = detail::eta_accel(s, digits, bits);
    if (integral) {
        auto& c = detail::zeta_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        c.eta.emplace(std::make_pair(si, bits), v);
    }
    return v;
}

inline Real eta_ref(long s, const PrecisionContext& ctx) {
    return eta_ref(Real(s, ctx.bits()), ctx);
}

// zeta(s) for s > 1: eta(s) / (1 - 2^(1-s)).
inline Real zeta_ref(const Real& s, const PrecisionContext& ctx) {
    if (!(s > 1)) throw DomainError("zeta_ref: requires s > 1");
    long bits = ctx.bits();
    bool integral = mpfr_integer_p(s.raw()) != 0 && s < 1000000L;
    long si = integral ? s.to_long() : 0;
    if (integral) {
        auto& c = detail::zeta_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.zeta.find({si, bits});
        if (it != c.zeta.end()) return it->second;
    }
    long wb = bits + 32;
    Real eta = eta_ref(s.rounded(wb), ctx);
    Real denom = 1 - pow(Real(2, wb), 1 - s.rounded(wb));
    Real v = (eta / denom).rounded(bits);
    if (integral) {
        auto& c = detail::zeta_cache();
        std::lock_guard<std::mutex> lock(c.mu);
        c.zeta.emplace(std::make_pair(si, bits), v);
    }
    return v;
}

inline Real zeta_ref(long s, const PrecisionContext& ctx) {
    return zeta_ref(Real(s, ctx.bits()), ctx);
}

// alpha(n) = sum over odd denominators = (2^n - 1)/2^n * zeta(n)
inline Real alpha_odd(long n, const PrecisionContext& ctx) {
    Real z = zeta_ref(n, ctx);
    return z - ldexp(z, -n);
}

// ---------------------------------------------------------------------------
// Independent second method: Euler-Maclaurin tail summation.  Used by the
// oracle-integrity tests; shares no machinery with the accelerated route.
// ---------------------------------------------------------------------------

inline Real zeta_euler_maclaurin(const Real& s, const PrecisionContext& ctx) {
    if (!(s > 1)) throw DomainError("zeta_euler_maclaurin: requires s > 1");
    long bits = ctx.bits();
    long wb = bits + 32;
    Real eps = ldexp(Real(1, wb), -(bits + 8));
    long N = std::max<long>(16, ctx.digits() + ctx.guard());
    for (int attempt = 0; attempt < 6; ++attempt, N *= 2) {
        Real sw = s.rounded(wb);
        Real acc(0, wb);
        for (long k = 1; k < N; ++k) acc += pow(Real(k, wb), -sw);
        Real Nr(N, wb);
        acc += pow(Nr, 1 - sw) / (sw - 1);
        acc += ldexp(pow(Nr, -sw), -1);
        // sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * N^(1-s-2j)
        Real rising = sw;                       // (s)_{2j-1}
        Real npow = pow(Nr, -sw - 1);           // N^(-s-2j+1)
        Real n2 = 1 / (Nr * Nr);
        bool converged = false;
        Real prev_mag(0, wb);
        for (long j = 1; j <= 4 * N; ++j) {
            BigRat w = bernoulli_any(2 * j) / BigRat(factorial(static_cast<unsigned long>(2 * j)));
            Real t = Real(w, wb) * rising * npow;
            Real mag = abs(t);
            if (j > 2 && mag > prev_mag) break; // asymptotic series turning; enlarge N
            acc += t;
            if (mag < eps) { converged = true; break; }
            prev_mag = mag;
            rising *= (sw + 2 * j - 1) * (sw + 2 * j);
            npow *= n2;
        }
        if (converged) return acc.rounded(bits);
    }
    throw AccuracyError("zeta_euler_maclaurin: failed to converge");
}

// Tail sum_{m=a}^{inf} (A + B m)^(-p) for integer p >= 2, by Euler-Maclaurin.
inline Real power_sum_tail(const Real& A, const Real& B, long p, long a,
                           const PrecisionContext& ctx) {
    long wb = ctx.bits() + 32;
    Real eps = ldexp(Real(1, wb), -(ctx.bits() + 8));
    Real base = A + B * Real(a, wb);
    if (!(base > 0)) throw DomainError("power_sum_tail: series start not positive");
    Real acc = pow(base, 1 - p) / (B * (p - 1));
    Real f = pow(base, -p);
    acc += ldexp(f, -1);
    Real rising(p, wb);      // (p)_{2j-1}
    Real bpow = B;           // B^{2j-1}
    Real fp = f / base;      // base^(-p-2j+1)
    Real ib2 = 1 / (base * base);
    Real prev_mag(0, wb);
    for (long j = 1; j <= 200; ++j) {
        BigRat w = bernoulli_any(2 * j) / BigRat(factorial(static_cast<unsigned long>(2 * j)));
        Real t = Real(w, wb) * rising * bpow * fp;
        Real mag = abs(t);
        if (j > 2 && mag > prev_mag)
            throw AccuracyError("power_sum_tail: EM series diverging; start the tail later");
        acc += t;
        if (mag < eps) return acc.rounded(ctx.bits());
        prev_mag = mag;
        rising *= (p + 2 * j - 1) * (p + 2 * j);
        bpow *= B * B;
        fp *= ib2;
    }
    throw AccuracyError("power_sum_tail: no convergence in 200 terms");
}

// ---------------------------------------------------------------------------
// In-tree recomputation of the stored literals (test support)
// ---------------------------------------------------------------------------

namespace detail {

// gamma = H_N - ln N - 1/(2N) + sum B_2j/(2j N^2j)
inline Real gamma_em(int digits) {
    PrecisionContext ctx(digits, 15);
    long wb = ctx.bits() + 32;
    long N = 2 * digits + 16;
    Real h(0, wb);
    for (long k = 1; k <= N; ++k) h += Real(1, wb) / k;
    Real Nr(N, wb);
    Real g = h - log(Nr) - 1 / (2 * Nr);
    Real n2 = 1 / (Nr * Nr);
    Real npow = n2;
    Real eps = ldexp(Real(1, wb), -(ctx.bits() + 8));
    for (long j = 1; j <= 2 * N; ++j) {
        Real t = Real(bernoulli_any(2 * j), wb) / (2 * j) * npow;
        g += t;
        if (abs(t) < eps) break;
        npow *= n2;
    }
    return g.rounded(ctx.bits());
}

// zeta'(2) = -sum ln k / k^2, Euler-Maclaurin tail with exact derivative
// coefficients of ln(x)/x^2.
inline Real zeta_prime_2(int digits) {
    PrecisionContext ctx(digits, 15);
    long wb = ctx.bits() + 32;
    long N = 2 * digits + 16;
    Real acc(0, wb);
    for (long k = 2; k < N; ++k) acc += log(Real(k, wb)) / (k * k);
    Real Nr(N, wb), lnN = log(Nr);
    acc += (lnN + 1) / Nr;          // integral
    acc += ldexp(lnN / (Nr * Nr), -1); // g(N)/2
    // g^{(m)}(x) = x^{-2-m} (a_m ln x + b_m); a_{m+1} = -(m+2) a_m, b_{m+1} = a_m - (m+2) b_m
    BigInt a(1), b(0);
    for (long m = 0; m < 1; ++m) { BigInt an = -(m + 2) * a; b = a - (m + 2) * b; a = an; }
    Real xp = pow(Nr, -3);
    Real in2 = 1 / (Nr * Nr);
    Real eps = ldexp(Real(1, wb), -(ctx.bits() + 8));
    long m = 1; // current derivative order held in (a, b, xp)
    for (long j = 1; j <= 2 * N; ++j) {
        while (m < 2 * j - 1) {
            BigInt an = -(m + 2) * a;
            b = a - (m + 2) * b;
            a = an;
            xp /= Nr;
            ++m;
        }
        BigRat w = bernoulli_any(2 * j) / BigRat(factorial(static_cast<unsigned long>(2 * j)));
        Real t = -Real(w, wb) * (Real(a, wb) * lnN + Real(b, wb)) * xp;
        acc += t;
        if (abs(t) < eps) break;
    }
    return (-acc).rounded(ctx.bits());
}

// ln A = (gamma + ln 2pi)/12 - zeta'(2)/(2 pi^2)
inline Real glaisher_em(int digits) {
    PrecisionContext ctx(digits, 15);
    long wb = ctx.bits() + 32;
    Real g = gamma_em(digits + 5).rounded(wb);
    Real zp = zeta_prime_2(digits + 5).rounded(wb);
    Real pi = const_pi(PrecisionContext(digits + 5, 15)).rounded(wb);
    Real lnA = (g + log(2 * pi)) / 12 - zp / (2 * pi * pi);
    return exp(lnA).rounded(ctx.bits());
}

} // namespace detail

} // namespace zetaforge

#endif
