#ifndef ZETAFORGE_CONTINUED_ROOTS_HPP
#define ZETAFORGE_CONTINUED_ROOTS_HPP

#include <string>
#include <vector>

#include "zetaforge/dynamic_sums.hpp"
#include "zetaforge/sign_sequence.hpp"
#include "zetaforge/specials.hpp"

namespace zetaforge {

// Infinite nested radical: the sign word is `prefix` followed by `repeat`
// forever.  An empty repeat means the all-plus extension (tail value 2).
struct RootPattern {
    SignSequence prefix;
    SignSequence repeat;

    // "prefix|repeat", e.g. "+|-" for prefix +, repeating -
    static RootPattern parse(const std::string& text) {
        auto bar = text.find('|');
        if (bar == std::string::npos)
            return RootPattern{SignSequence::parse(text), SignSequence()};
        return RootPattern{SignSequence::parse(text.substr(0, bar)),
                           SignSequence::parse(text.substr(bar + 1))};
    }

    std::string str() const { return prefix.str() + "|" + repeat.str(); }
};

namespace detail {

// Apply one sign word outside an inner value: sqrt(2 s1 sqrt(... sk inner)).
inline Real nest_word(const SignSequence& word, const Real& inner) {
    Real v = inner;
    for (size_t i = word.depth(); i-- > 0;) {
        Real arg = word.at(i) > 0 ? 2 + v : 2 - v;
        if (arg.sign() < 0) throw DomainError("nested radical: negative radicand");
        v = sqrt(arg);
    }
    return v;
}

// Derivative of nest_word with respect to the inner value, evaluated along
// the same chain: product of s_i / (2 v_i).
inline Real nest_word_derivative(const SignSequence& word, const Real& inner) {
    long wb = inner.prec();
    std::vector<Real> vals;
    Real v = inner;
    for (size_t i = word.depth(); i-- > 0;) {
        v = sqrt(word.at(i) > 0 ? 2 + v : 2 - v);
        vals.push_back(v);
    }
    Real d(1, wb);
    for (size_t k = 0; k < word.depth(); ++k) {
        size_t sign_index = word.depth() - 1 - k;
        Real dv = Real(word.at(sign_index), wb) / (2 * vals[k]);
        d *= dv;
    }
    return d;
}

} // namespace detail

// Value of the infinite radical.  Periodic tails solve the fixed point
// t = nest(repeat, t); among candidates in [0,2] we keep the one reached by
// iterated numerical evaluation (the paper's spurious roots are repelling).
inline Real continued_root_value(const RootPattern& p, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    Real t(2, wb); // all-plus extension limit
    if (!p.repeat.empty()) {
        // plain iteration first: contraction toward the attracting root
        t = Real(1, wb);
        Real prev = t;
        long iters = 64 + ctx.digits();
        for (long i = 0; i < iters; ++i) {
            prev = t;
            t = detail::nest_word(p.repeat, t);
        }
        if (abs(t - prev) > Real("1e-3", 64))
            throw InconsistencyError("continued_root_value: iteration does not settle for '" +
                                     p.str() + "'");
        // Newton polish on F(t) = nest(repeat, t) - t
        Real eps = ldexp(Real(1, wb), -(ctx.bits() - 4));
        for (int i = 0; i < 64; ++i) {
            Real f = detail::nest_word(p.repeat, t) - t;
            if (abs(f) < eps) break;
            Real fp = detail::nest_word_derivative(p.repeat, t) - 1;
            t -= f / fp;
        }
        if (t < -1 || t > Real("2.0000001", 64))
            throw InconsistencyError("continued_root_value: fixed point escapes [0, 2]");
        if (t.sign() < 0) t = Real(0, wb);
        if (t > 2) t = Real(2, wb);
    }
    return detail::nest_word(p.prefix, t);
}

// Finite-depth radical as a function of x: the innermost sqrt(2) is replaced
// by 2x, i.e. sqrt(2 s1 sqrt(... sqrt(2 sk 2x))).  At x = sqrt(2)/2 this is
// exactly elementary_value(seq).
inline Real elementary_function(const SignSequence& seq, const Real& x,
                                const PrecisionContext& ctx) {
    if (abs(x) > 1) throw DomainError("elementary_function: |x| <= 1 required");
    long wb = ctx.bits();
    return detail::nest_word(seq, ldexp(x.rounded(wb), 1));
}

// The trigonometric alternate form of the same function:
// 2 sin( ((-1)^i asin x + (2 floor((2i-1)/4) + 1) pi/2) / 2^(n-2) ),
// where i indexes the word's angle (2i-1)/2^n.  Kept separate so tests can
// pit the radical and trig routes against each other.
inline Real elementary_function_trig(const SignSequence& seq, const Real& x,
                                     const PrecisionContext& ctx) {
    if (abs(x) > 1) throw DomainError("elementary_function_trig: |x| <= 1 required");
    long wb = ctx.bits();
    BigRat q = angle_of(seq);
    long n = static_cast<long>(seq.depth()) + 2;
    long i = (q.get_num().get_si() + 1) / 2;
    Real pi = const_pi(ctx);
    Real inner = asin(x.rounded(wb));
    if (i % 2 == 1) inner.neg();
    inner += Real(2 * ((2 * i - 1) / 4) + 1, wb) * pi / 2;
    return 2 * sin(ldexp(inner, -(n - 2)));
}

// Limits of depth-extended elementary terms: 1/(8((2i-1)pi -+ 2 asin x)^3).
enum class LimitBranch { minus, plus };

inline Real limit_function(long i, LimitBranch branch, const Real& x,
                           const PrecisionContext& ctx) {
    if (i < 1) throw DomainError("limit_function: i must be >= 1");
    if (abs(x) > 1) throw DomainError("limit_function: |x| <= 1 required");
    long wb = ctx.bits();
    Real pi = const_pi(ctx);
    Real u = ldexp(asin(x.rounded(wb)), 1);
    Real base = Real(2 * i - 1, wb) * pi + (branch == LimitBranch::minus ? -u : u);
    return ldexp(pow(base, -3), -3);
}

// ---------------------------------------------------------------------------
// S(x) and the A_n / A~_n families
// ---------------------------------------------------------------------------

struct TailSumResult {
    Real value;         // partial sum over the first `terms` indices
    Real tail_estimate; // integral-comparison estimate of the dropped tail
    Real uncertainty;   // |true tail - estimate| is below this bound
};

namespace detail {

// sum_{m=1..T} [(pi(2m-1) - u)^-p + (pi(2m-1) + u)^-p] plus integral tail
// data; u = 2 asin x.
inline TailSumResult symmetric_inverse_power_sum(const Real& u, long p, long terms,
                                                 const PrecisionContext& ctx) {
    long wb = ctx.bits();
    Real pi = const_pi(ctx);
    Real acc(0, wb);
    for (long m = 1; m <= terms; ++m) {
        Real a = Real(2 * m - 1, wb) * pi;
        acc += pow(a - u, -p) + pow(a + u, -p);
    }
    // integral comparison from the midpoint T + 1/2: f decreasing in m
    Real mid = Real(2 * terms, wb) * pi; // pi(2(T+1/2) - 1)
    Real est = (pow(mid - u, 1 - p) + pow(mid + u, 1 - p)) / (2 * pi * (p - 1));
    Real first = Real(2 * terms + 1, wb) * pi;
    Real unc = pow(first - u, -p) + pow(first + u, -p);
    return TailSumResult{acc, est, unc};
}

} // namespace detail

// S(x) = (1/8) sum_i [ (pi(2i-1) - 2 asin x)^-3 + (pi(2i-1) + 2 asin x)^-3 ]
inline TailSumResult S_of_x(const Real& x, long terms, const PrecisionContext& ctx) {
    if (!(abs(x) < 1)) throw DomainError("S_of_x: |x| < 1 required");
    if (terms < 1) throw DomainError("S_of_x: terms must be >= 1");
    Real u = ldexp(asin(x.rounded(ctx.bits())), 1);
    TailSumResult r = detail::symmetric_inverse_power_sum(u, 3, terms, ctx);
    r.value = ldexp(r.value, -3);
    r.tail_estimate = ldexp(r.tail_estimate, -3);
    r.uncertainty = ldexp(r.uncertainty, -3);
    return r;
}

enum class SxIdentity { half_angle_split, double_angle };

struct ResidualResult {
    Real residual; // |lhs - rhs| with tail-corrected values
    Real bound;    // combined uncertainty of the tail corrections
};

// Functional equations of S:
//   half_angle_split: S(x) = (1/8) (S(sqrt(2+2x)/2) + S(sqrt(2-2x)/2))
//   double_angle:     S(x) = 8 S(1-2x^2) - S(sqrt(1-x^2)), x != 0
inline ResidualResult functional_equation_residual(const Real& x, long terms,
                                                   const PrecisionContext& ctx,
                                                   SxIdentity which = SxIdentity::half_angle_split) {
    if (!(abs(x) < 1)) throw DomainError("functional_equation_residual: |x| < 1 required");
    long wb = ctx.bits();
    Real xw = x.rounded(wb);
    auto corrected = [&](const Real& arg, long scale_num) {
        TailSumResult r = S_of_x(arg, terms, ctx);
        return std::make_pair((r.value + r.tail_estimate) * scale_num,
                              r.uncertainty * scale_num);
    };
    if (which == SxIdentity::half_angle_split) {
        auto lhs = corrected(xw, 8);
        auto r1 = corrected(ldexp(sqrt(2 + 2 * xw), -1), 1);
        auto r2 = corrected(ldexp(sqrt(2 - 2 * xw), -1), 1);
        return ResidualResult{abs(lhs.first - r1.first - r2.first) / 8,
                              (lhs.second + r1.second + r2.second) / 8};
    }
    if (xw.is_zero())
        throw DomainError("functional_equation_residual: double_angle identity is singular at 0");
    auto lhs = corrected(xw, 1);
    auto r1 = corrected(1 - 2 * xw * xw, 8);
    auto r2 = corrected(sqrt(1 - xw * xw), 1);
    return ResidualResult{abs(lhs.first - r1.first + r2.first),
                          lhs.second + r1.second + r2.second};
}

// A_n(x) = pi^n/(2^n - 1) sum_i [(pi(2i-1) - 2 asin x)^-n + (... + ...)^-n];
// A_n(sqrt2/2) = zeta(n).
inline TailSumResult A_family(long n, const Real& x, long terms, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("A_family: n must be >= 2");
    if (!(abs(x) < 1)) throw DomainError("A_family: |x| < 1 required");
    long wb = ctx.bits();
    Real u = ldexp(asin(x.rounded(wb)), 1);
    TailSumResult r = detail::symmetric_inverse_power_sum(u, n, terms, ctx);
    Real pref = pow(const_pi(ctx), n) / Real(BigInt(pow2_int(static_cast<unsigned long>(n)) - 1), wb);
    r.value *= pref;
    r.tail_estimate *= pref;
    r.uncertainty *= pref;
    return r;
}

// A~_n(x) = pi^n/(2^n - 1) sum_i (i pi - 2 asin x)^-n; A~_n(sqrt2/2) = zeta(n).
inline TailSumResult A_tilde_family(long n, const Real& x, long terms,
                                    const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("A_tilde_family: n must be >= 2");
    if (!(abs(x) < 1)) throw DomainError("A_tilde_family: |x| < 1 required");
    long wb = ctx.bits();
    Real pi = const_pi(ctx);
    Real u = ldexp(asin(x.rounded(wb)), 1);
    Real acc(0, wb);
    for (long m = 1; m <= terms; ++m) acc += pow(m * pi - u, -n);
    Real mid = (Real(terms, wb) + Real(1, wb) / 2) * pi - u;
    Real est = pow(mid, 1 - n) / (pi * (n - 1));
    Real unc = pow(Real(terms + 1, wb) * pi - u, -n);
    Real pref = pow(pi, n) / Real(BigInt(pow2_int(static_cast<unsigned long>(n)) - 1), wb);
    return TailSumResult{acc * pref, est * pref, unc * pref};
}

// ---------------------------------------------------------------------------
// Expansion coefficients of Sigma_n(x) in powers of arcsin
// ---------------------------------------------------------------------------

struct SigmaCoeff {
    BigInt k;          // integer factor
    long pi_power;     // divide by pi^pi_power
    long arcsin_power; // multiply by arcsin(x)^arcsin_power
};

// Sigma_{n}(x) = sum_{i>=0} k_i / pi^(n+2i) * alpha(n+2i) * arcsin(x)^2i with
// k_i = 2^(2i+1) C(n-1+2i, n-1); valid for odd n >= 3.
inline SigmaCoeff sigma_coeff(long n_odd, long i) {
    if (n_odd < 3 || n_odd % 2 == 0) throw DomainError("sigma_coeff: n must be odd and >= 3");
    if (i < 0) throw DomainError("sigma_coeff: i must be >= 0");
    SigmaCoeff c;
    c.k = pow2_int(static_cast<unsigned long>(2 * i + 1)) *
          binomial(static_cast<unsigned long>(n_odd - 1 + 2 * i),
                   static_cast<unsigned long>(n_odd - 1));
    c.pi_power = n_odd + 2 * i;
    c.arcsin_power = 2 * i;
    return c;
}

// Sigma_n(x) to full precision: direct sum to M terms plus Euler-Maclaurin
// tails on both branches.  Used as the oracle side of the expansion tests.
inline Real sigma_n_exact(long n, const Real& x, const PrecisionContext& ctx, long M = 48) {
    if (n < 2) throw DomainError("sigma_n_exact: n must be >= 2");
    long wb = ctx.bits();
    Real pi = const_pi(ctx);
    Real u = ldexp(asin(x.rounded(wb)), 1);
    Real acc(0, wb);
    for (long m = 1; m <= M; ++m) {
        Real a = Real(2 * m - 1, wb) * pi;
        acc += pow(a - u, -n) + pow(a + u, -n);
    }
    // (2m-1) pi -+ u = 2 pi m - (pi +- u)
    acc += power_sum_tail(-(pi + u), 2 * pi, n, M + 1, ctx);
    acc += power_sum_tail(-(pi - u), 2 * pi, n, M + 1, ctx);
    return acc;
}

// ---------------------------------------------------------------------------
// Matrix-route function family and the averaged sum
// ---------------------------------------------------------------------------

// F_n(x) = 2^-(3n-2) 1^T M_n v_n(x), the x-dependent extension of the matrix
// route; F_n(sqrt2/2) = S_n.
inline Real related_function(long n, const Real& x, const PrecisionContext& ctx) {
    if (n < 3) throw DomainError("related_function: n must be >= 3");
    if (abs(x) > 1) throw DomainError("related_function: |x| <= 1 required");
    long wb = ctx.bits();
    TransformMatrix m = make_transform_matrix(n);
    auto seqs = basis_sequences(n);
    Real acc(0, wb);
    for (long i = 0; i < m.dim(); ++i) {
        Real row(0, wb);
        for (long j = 0; j < m.dim(); ++j)
            row += m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                   elementary_function(seqs[static_cast<size_t>(j)], x, ctx);
        acc += row;
    }
    acc *= Real(m.scale, wb);
    return ldexp(acc, -(3 * n - 3));
}

// Averaged variant: each sine factor replaced by its local mean, which works
// out to hat_S_n = (2^(n-1)/pi) sin(pi/2^(n-1)) S_n.  Catalog curiosity.
inline Real averaged_dynamic_sum(long n, const PrecisionContext& ctx) {
    Real pi = const_pi(ctx);
    Real s = dynamic_sum(n, n <= transform_matrix_max_n ? SumRoute::matrix_basis
                                                        : SumRoute::direct_sine,
                         ctx).value;
    return ldexp(sin(ldexp(pi, -(n - 1))), n - 1) / pi * s;
}

} // namespace zetaforge

#endif
