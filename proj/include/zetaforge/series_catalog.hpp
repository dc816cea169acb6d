#ifndef ZETAFORGE_SERIES_CATALOG_HPP
#define ZETAFORGE_SERIES_CATALOG_HPP

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zetaforge/constants.hpp"
#include "zetaforge/specials.hpp"

namespace zetaforge {

// ---------------------------------------------------------------------------
// Exact factorial-ratio helpers shared by the catalog
// ---------------------------------------------------------------------------

// (n!)^2 / ((n-j)! (n+j)!) via the term ratio a_{j+1}/a_j = (n-j)/(n+j+1),
// never through raw factorials.
inline BigRat factorial_ratio(long n, long j) {
    if (j < 0 || j > n) throw DomainError("factorial_ratio: need 0 <= j <= n");
    BigRat a(1);
    for (long i = 0; i < j; ++i) a *= make_rat(n - i, n + i + 1);
    return a;
}

// sum_{j=1}^n (-1)^(j-1) factorial_ratio(n,j) j^m, exact.
inline BigRat gosper_sum(long n, long m) {
    if (n < 1 || m < 0) throw DomainError("gosper_sum: need n >= 1, m >= 0");
    BigRat acc(0);
    BigRat a(1);
    for (long j = 1; j <= n; ++j) {
        a *= make_rat(n - j + 1, n + j);
        BigRat t = a * BigRat(pow_int(BigInt(j), static_cast<unsigned long>(m)));
        acc += (j % 2 == 1) ? t : -t;
    }
    return acc;
}

// Closed forms of gosper_sum for m in {0,1,3,5,7} plus the even-power zero.
// Odd m >= 3 carries the sign (-1)^((m-1)/2), which the printed table drops.
inline BigRat gosper_closed_form(long n, long m) {
    if (n < 1) throw DomainError("gosper_closed_form: n must be >= 1");
    switch (m) {
        case 0: return make_rat(1, 2);
        case 1: return make_rat(n, 2 * (2 * n - 1));
        case 3: return -make_rat(BigInt(n) * n, BigInt(2) * (2 * n - 1) * (2 * n - 3));
        case 5:
            return make_rat(BigInt(n) * n * (4 * n - 1),
                            BigInt(2) * (2 * n - 1) * (2 * n - 3) * (2 * n - 5));
        case 7:
            return -make_rat(BigInt(n) * n * (BigInt(34) * n * n - 24 * n + 5),
                             BigInt(2) * (2 * n - 1) * (2 * n - 3) * (2 * n - 5) * (2 * n - 7));
        default:
            if (m >= 2 && m % 2 == 0 && n > m) return BigRat(0);
            throw DomainError("gosper_closed_form: no closed form stored for this m/n");
    }
}

// sum_{i=1}^n (-1)^(i-1) factorial_ratio(n,i)/i^k -> eta(k) (1/2 for k = 0).
inline Real eta_factorial_limit(long k, long n, const PrecisionContext& ctx) {
    if (k < 0 || n < 1) throw DomainError("eta_factorial_limit: need k >= 0, n >= 1");
    long wb = ctx.bits();
    Real a(1, wb);
    Real acc(0, wb);
    for (long i = 1; i <= n; ++i) {
        a *= Real(n - i + 1, wb);
        a /= n + i;
        Real t = (k == 0) ? a : a / pow(Real(i, wb), k);
        acc += (i % 2 == 1) ? t : -t;
    }
    return acc;
}

// factorial_ratio(n,j) == (n-j+1) C(n,j-1) / ((n+1) C(n+j,j-1)), exactly.
inline bool binomial_ratio_identity_check(long n, long j) {
    if (j < 1 || j > n) throw DomainError("binomial_ratio_identity_check: need 1 <= j <= n");
    BigRat lhs = factorial_ratio(n, j);
    BigRat rhs = make_rat(BigInt(n - j + 1) * binomial(static_cast<unsigned long>(n),
                                                       static_cast<unsigned long>(j - 1)),
                          BigInt(n + 1) * binomial(static_cast<unsigned long>(n + j),
                                                   static_cast<unsigned long>(j - 1)));
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Registry types
// ---------------------------------------------------------------------------

enum class FormulaTarget { zeta3, zeta_n, eta_n, constant_identity };
enum class ConvergenceClass { geometric, power_law, dynamic };

inline const char* target_name(FormulaTarget t) {
    switch (t) {
        case FormulaTarget::zeta3: return "zeta3";
        case FormulaTarget::zeta_n: return "zeta_n";
        case FormulaTarget::eta_n: return "eta_n";
        case FormulaTarget::constant_identity: return "constant_identity";
    }
    return "?";
}

inline const char* convergence_name(ConvergenceClass c) {
    switch (c) {
        case ConvergenceClass::geometric: return "geometric";
        case ConvergenceClass::power_law: return "power_law";
        case ConvergenceClass::dynamic: return "dynamic";
    }
    return "?";
}

struct FormulaParams {
    std::map<std::string, long> values;

    long get(const std::string& name, long fallback) const {
        auto it = values.find(name);
        return it == values.end() ? fallback : it->second;
    }
};

struct EvaluationResult {
    std::string formula_id;
    Real value;
    long terms = 0;
    int digits_requested = 0;
    int digits_internal = 0;
    bool has_reference = false;
    Real abs_error_vs_ref; // signed, value - reference
    double elapsed_seconds = 0.0;
};

using EvalFn = std::function<Real(const FormulaParams&, long, const PrecisionContext&)>;
using RefFn = std::function<Real(const FormulaParams&, const PrecisionContext&)>;
using ExtraFn = std::function<int(const FormulaParams&, long)>;

struct FormulaDescriptor {
    std::string id;
    FormulaTarget target = FormulaTarget::zeta3;
    std::string params_schema; // "" when the formula takes no parameters
    std::string citation;
    ConvergenceClass convergence = ConvergenceClass::geometric;
    std::vector<ConstantId> requires_constants;
    EvalFn eval;
    RefFn reference;
    ExtraFn extra_digits; // internal elevation policy; may be null
};

namespace detail {

inline Real ref_zeta3(const FormulaParams&, const PrecisionContext& ctx) {
    return zeta_ref(3, ctx);
}

inline RefFn ref_zeta_param(long min_k) {
    return [min_k](const FormulaParams& p, const PrecisionContext& ctx) {
        long k = p.get("k", 3);
        if (k < min_k) throw DomainError("parameter k must be >= " + std::to_string(min_k));
        return zeta_ref(k, ctx);
    };
}

inline RefFn ref_eta_param(long min_k) {
    return [min_k](const FormulaParams& p, const PrecisionContext& ctx) {
        long k = p.get("k", 3);
        if (k < min_k) throw DomainError("parameter k must be >= " + std::to_string(min_k));
        return eta_ref(k, ctx);
    };
}

// zeta(2k) from the exact Bernoulli closed form (exercises the
// special-number path instead of the oracle).
inline Real zeta_even_bernoulli(long k, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    BigRat b = bernoulli_any(2 * k);
    Real num = Real(abs(BigRat(b)), wb) * pow(2 * const_pi(ctx), 2 * k);
    return num / (2 * Real(factorial(static_cast<unsigned long>(2 * k)), wb));
}

// zeta(s) - 1 at enough extra precision that the cancellation is harmless.
inline Real zeta_minus_1(long s, const PrecisionContext& ctx) {
    PrecisionContext ectx(ctx.digits(), ctx.guard() + static_cast<int>(0.302 * s) + 8);
    return (zeta_ref(s, ectx) - 1).rounded(ctx.bits());
}

std::vector<FormulaDescriptor> build_registry();

} // namespace detail

inline const std::vector<FormulaDescriptor>& list_formulas() {
    static const std::vector<FormulaDescriptor> registry = detail::build_registry();
    return registry;
}

inline const FormulaDescriptor& find_formula(const std::string& id) {
    for (const auto& d : list_formulas())
        if (d.id == id) return d;
    throw UnknownFormulaError("unknown formula id '" + id + "'");
}

inline EvaluationResult evaluate(const std::string& id, const FormulaParams& params, long terms,
                                 const PrecisionContext& ctx) {
    const FormulaDescriptor& d = find_formula(id);
    if (terms < 1) throw DomainError("evaluate: terms must be >= 1");
    int extra = d.extra_digits ? d.extra_digits(params, terms) : 0;
    PrecisionContext ectx = ctx.elevated(extra);
    auto t0 = std::chrono::steady_clock::now();
    Real value = d.eval(params, terms, ectx).rounded(ctx.bits());
    auto t1 = std::chrono::steady_clock::now();
    EvaluationResult r;
    r.formula_id = d.id;
    r.value = value;
    r.terms = terms;
    r.digits_requested = ctx.digits();
    r.digits_internal = ectx.digits() + ectx.guard();
    if (d.reference) {
        r.has_reference = true;
        r.abs_error_vs_ref = value - d.reference(params, ctx).rounded(ctx.bits());
    }
    r.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return r;
}

// ---------------------------------------------------------------------------
// The registry itself
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<FormulaDescriptor> build_registry() {
    std::vector<FormulaDescriptor> reg;
    auto add = [&reg](const char* id, FormulaTarget target, const char* schema,
                      const char* citation, ConvergenceClass conv,
                      std::vector<ConstantId> needs, EvalFn eval, RefFn ref,
                      ExtraFn extra = nullptr) {
        FormulaDescriptor d;
        d.id = id;
        d.target = target;
        d.params_schema = schema;
        d.citation = citation;
        d.convergence = conv;
        d.requires_constants = std::move(needs);
        d.eval = std::move(eval);
        d.reference = std::move(ref);
        d.extra_digits = std::move(extra);
        reg.push_back(std::move(d));
    };

    const auto PI = ConstantId::pi;
    const auto LN2 = ConstantId::ln2;

    // ---- zeta(3) series from the csc-kernel expansions ---------------------

    add("Z3_LOG_ALT", FormulaTarget::zeta3, "",
        "alternating log-weight series from the csc kernel partial fractions",
        ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(1, wb);
            for (long j = 1; j <= T; ++j) {
                Real lg = log(Real(j, wb) / (j + 1));
                Real t = (2 * j + 1) + Real(2 * j, wb) * (j + 1) * lg;
                acc += (j % 2 == 1) ? -t : t;
            }
            Real pi = const_pi(ctx);
            return pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_LOG_POS", FormulaTarget::zeta3, "",
        "positive log-weight series from the Euler sine product",
        ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j) {
                // 1 + 2j [ ln((2j-1)/(2j+1)) + 2j ln(4j^2/(4j^2-1)) ], via log1p
                Real inv = Real(-2, wb) / (2 * j + 1);
                Real lsmall = log1p(inv); // ln((2j-1)/(2j+1))
                Real lbig = -log1p(Real(-1, wb) / (Real(4, wb) * j * j));
                acc += 1 + 2 * j * (lsmall + 2 * j * lbig);
            }
            Real pi = const_pi(ctx);
            return pi * pi / 7 * (1 + 2 * acc);
        },
        ref_zeta3,
        [](const FormulaParams&, long T) {
            return static_cast<int>(2.0 * std::log10(static_cast<double>(T) + 2)) + 6;
        });

    add("Z3_ETA_QUAD", FormulaTarget::zeta3, "",
        "eta-weighted quadratic-denominator series", ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j)
                acc += eta_ref(j, ctx) / (Real(j + 1, wb) * (j + 2));
            Real pi = const_pi(ctx);
            return 2 * pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_ETA_QUAD_FAST", FormulaTarget::zeta3, "",
        "eta-weighted quadratic series with its limit-completing head term",
        ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = eta_ref(T + 1, ctx) / (T + 2);
            for (long j = 1; j <= T; ++j)
                acc += eta_ref(j, ctx) / (Real(j + 1, wb) * (j + 2));
            Real pi = const_pi(ctx);
            return 2 * pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_ETA_EVEN", FormulaTarget::zeta3, "",
        "even-eta quadratic-denominator series", ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = Real(1, wb) / 4;
            for (long j = 1; j <= T; ++j)
                acc += eta_ref(2 * j, ctx) / (Real(2 * j + 1, wb) * (2 * j + 2));
            Real pi = const_pi(ctx);
            return 2 * pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_ETA_FAST", FormulaTarget::zeta3, "",
        "half-argument even-eta series; about 0.6 digits per term",
        ConvergenceClass::geometric, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = Real(3, wb) / 8;
            for (long j = 1; j <= T; ++j) {
                Real num = Real(2 * j + 3, wb) * eta_ref(2 * j, ctx);
                acc += ldexp(num / (Real(2 * j + 1, wb) * (2 * j + 2)), -(2 * j + 1));
            }
            Real pi = const_pi(ctx);
            return 2 * pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_ETA_K2K1", FormulaTarget::zeta3, "",
        "series in eta(2k-2) - 1 over k(2k-1); 7 decimals in 10 terms",
        ConvergenceClass::geometric, {PI, LN2},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = 2 * const_ln2(ctx);
            for (long k = 1; k <= T; ++k) {
                Real e = (k == 1) ? Real(1, wb) / 2 : eta_ref(2 * k - 2, ctx);
                acc += (e - 1) / (Real(k, wb) * (2 * k - 1));
            }
            Real pi = const_pi(ctx);
            return pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_ETA_JJ1", FormulaTarget::zeta3, "",
        "even-eta series with ln(pi/2) head from the tan-kernel antiderivative",
        ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real pi = const_pi(ctx);
            Real acc = log(ldexp(pi, -1)) - Real(1, wb) / 2;
            for (long j = 1; j <= T; ++j)
                acc += eta_ref(2 * j, ctx) / (Real(j, wb) * (j + 1));
            return pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_SELF_80P", FormulaTarget::zeta3, "",
        "self-referential form with prefactor 80 pi^2/(280 - 3 pi^2)",
        ConvergenceClass::power_law, {PI, LN2},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real pi = const_pi(ctx);
            Real acc = pi * pi / 144 + const_ln2(ctx) / 6;
            for (long j = 4; j <= T + 3; ++j)
                acc += eta_ref(j, ctx) / (Real(j + 1, wb) * (j + 2));
            return 80 * pi * pi / (280 - 3 * pi * pi) * acc;
        },
        ref_zeta3);

    add("Z3_SELF_80M", FormulaTarget::zeta3, "",
        "self-referential alternating form with prefactor 80 pi^2/(280 + 3 pi^2)",
        ConvergenceClass::power_law, {PI, LN2},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real pi = const_pi(ctx);
            Real acc = pi * pi / 144 - const_ln2(ctx) / 6 + Real(1, wb) / 2;
            for (long j = 4; j <= T + 3; ++j) {
                Real t = eta_ref(j, ctx) / (Real(j + 1, wb) * (j + 2));
                acc += (j % 2 == 0) ? t : -t;
            }
            return 80 * pi * pi / (280 + 3 * pi * pi) * acc;
        },
        ref_zeta3);

    add("Z3_ODD_ETA_80", FormulaTarget::zeta3, "",
        "odd-eta series with rational prefactor 80/3", ConvergenceClass::power_law, {LN2},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = Real(1, wb) / 4 - const_ln2(ctx) / 6;
            for (long j = 2; j <= T + 1; ++j)
                acc -= eta_ref(2 * j + 1, ctx) / (Real(2 * j + 2, wb) * (2 * j + 3));
            return Real(80, wb) / 3 * acc;
        },
        ref_zeta3);

    add("Z3_EULER_NUM", FormulaTarget::zeta3, "",
        "Euler-number series from the secant expansion about pi/2",
        ConvergenceClass::geometric, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real pi = const_pi(ctx);
            Real pi2 = pi * pi;
            Real acc = pow(pi, 3) / 8;
            for (long j = 1; j <= T; ++j) {
                Real inner = pi2 * Real(euler_number(2 * j), wb) /
                                 (4 * Real(factorial(static_cast<unsigned long>(2 * j)), wb)) +
                             Real(euler_number(2 * j - 2), wb) /
                                 Real(factorial(static_cast<unsigned long>(2 * j - 2)), wb);
                Real t = pow(pi, 2 * j + 1) / (Real(2 * j + 1, wb) * pow2(2 * j + 1, wb)) * inner;
                acc += (j % 2 == 1) ? -t : t;
            }
            return Real(2, wb) / 7 * acc;
        },
        ref_zeta3,
        [](const FormulaParams&, long T) { return static_cast<int>(0.96 * T) + 10; });

    add("Z3_BERN_ZETA_EVEN", FormulaTarget::zeta3, "",
        "even-zeta series with Bernoulli closed forms feeding zeta(2k)",
        ConvergenceClass::geometric, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = Real(1, wb) / 4;
            for (long k = 1; k <= T; ++k) {
                Real z2k = zeta_even_bernoulli(k, ctx);
                acc -= z2k / (pow2(2 * k + 1, wb) * (k + 1) * (2 * k + 1));
            }
            Real pi = const_pi(ctx);
            return 4 * pi * pi / 7 * acc;
        },
        ref_zeta3);

    add("Z3_BINOM_ETA", FormulaTarget::zeta3, "",
        "re-summed binomial/eta double series of the factorial-ratio logarithm",
        ConvergenceClass::power_law, {PI, LN2},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = const_ln2(ctx) / 3;
            for (long k = 4; k <= T + 3; ++k) {
                Real inner(0, wb);
                for (long j = 1; j <= k - 2; ++j) {
                    Real t = Real(binomial(static_cast<unsigned long>(k),
                                           static_cast<unsigned long>(j + 2)), wb) *
                             eta_ref(j, ctx);
                    inner += (j % 2 == 1) ? -t : t;
                }
                acc -= Real(k - 2, wb) / 4 + inner / k;
            }
            Real pi = const_pi(ctx);
            return 4 * pi * pi / 7 * acc;
        },
        ref_zeta3,
        [](const FormulaParams&, long T) { return static_cast<int>(0.31 * (T + 4)) + 10; });

    add("Z3_BIGENERGY", FormulaTarget::zeta3, "",
        "dynamic binomial sum with individually huge terms; complete at each n",
        ConvergenceClass::dynamic, {},
        [](const FormulaParams&, long n, const PrecisionContext& ctx) {
            if (n < 6) throw DomainError("Z3_BIGENERGY: needs n >= 6");
            long wb = ctx.bits();
            Real acc(0, wb);
            // n!/((j+5)(j+5)!(n-j)!) = C(n,j) / ((j+1)...(j+5) (j+5))
            Real binom(1, wb);
            for (long j = 1; j <= n - 5; ++j) {
                binom *= Real(n - j + 1, wb);
                binom /= j;
                Real den = Real(j + 1, wb) * (j + 2) * (j + 3) * (j + 4) * (j + 5) * (j + 5);
                Real t = binom / den * eta_ref(3 + j, ctx);
                acc += (j % 2 == 1) ? t : -t;
            }
            return 800 * acc;
        },
        ref_zeta3,
        [](const FormulaParams&, long n) { return static_cast<int>(0.31 * n) + 10; });

    add("Z3_FACT_LN", FormulaTarget::zeta3, "",
        "dynamic factorial-ratio sum against ln j", ConvergenceClass::dynamic, {PI},
        [](const FormulaParams&, long n, const PrecisionContext& ctx) {
            if (n < 3) throw DomainError("Z3_FACT_LN: needs n >= 3");
            long wb = ctx.bits();
            Real acc(0, wb);
            Real fr(1, wb);
            fr *= Real(n, wb) / (n + 1); // factorial_ratio(n, 1)
            for (long j = 2; j <= n - 1; ++j) {
                fr *= Real(n - j + 1, wb);
                fr /= n + j;
                Real t = fr * j * j * log(Real(j, wb));
                acc += (j % 2 == 0) ? t : -t; // (-1)^j
            }
            Real pi = const_pi(ctx);
            return 4 * pi * pi / 7 * acc;
        },
        ref_zeta3,
        [](const FormulaParams&, long n) { return static_cast<int>(0.31 * n) + 10; });

    add("Z3_FACT_LOGRATIO", FormulaTarget::zeta3, "",
        "dynamic factorial-ratio sum against the csc partial-fraction logarithm",
        ConvergenceClass::dynamic, {PI},
        [](const FormulaParams&, long n, const PrecisionContext& ctx) {
            if (n < 2) throw DomainError("Z3_FACT_LOGRATIO: needs n >= 2");
            long wb = ctx.bits();
            Real acc(0, wb);
            Real fr(1, wb);
            for (long j = 1; j <= n; ++j) {
                fr *= Real(n - j + 1, wb);
                fr /= n + j;
                Real lsmall = log1p(Real(-2, wb) / (2 * j + 1));
                Real lbig = -log1p(Real(-1, wb) / (Real(4, wb) * j * j));
                Real t = fr * j * (lsmall + j * lbig);
                acc += (j % 2 == 0) ? t : -t; // (-1)^j
            }
            Real pi = const_pi(ctx);
            return 2 * pi * pi / 7 * acc;
        },
        ref_zeta3,
        [](const FormulaParams&, long n) { return static_cast<int>(0.31 * n) + 10; });

    // ---- step recurrences for zeta(n)/eta(n) -------------------------------

    add("ZN_EVEN_STEP", FormulaTarget::zeta_n, "k: integer >= 2 (default 3)",
        "zeta(k) from zeta at even-shifted arguments; ratio 1/4",
        ConvergenceClass::geometric, {},
        [](const FormulaParams& p, long T, const PrecisionContext& ctx) {
            long k = p.get("k", 3);
            if (k < 2) throw DomainError("ZN_EVEN_STEP: k must be >= 2");
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long i = 1; i <= T; ++i) {
                Real w = Real(BigInt(pow2_int(static_cast<unsigned long>(2 * i + k)) - 1), wb);
                w = ldexp(w, -4 * i);
                acc += w * Real(binomial(static_cast<unsigned long>(k + 2 * i - 1),
                                         static_cast<unsigned long>(k - 1)), wb) *
                       zeta_ref(k + 2 * i, ctx);
            }
            Real den = Real(BigInt((pow2_int(static_cast<unsigned long>(k - 1)) - 1) *
                                   (pow2_int(static_cast<unsigned long>(k)) - 1)), wb);
            return acc / den;
        },
        ref_zeta_param(2));

    add("ZN_ALL_STEP", FormulaTarget::zeta_n, "k: integer >= 2 (default 3)",
        "zeta(k) from zeta at all shifted arguments; ratio 1/2",
        ConvergenceClass::geometric, {},
        [](const FormulaParams& p, long T, const PrecisionContext& ctx) {
            long k = p.get("k", 3);
            if (k < 2) throw DomainError("ZN_ALL_STEP: k must be >= 2");
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long i = 1; i <= T; ++i)
                acc += ldexp(Real(binomial(static_cast<unsigned long>(k + i - 1),
                                           static_cast<unsigned long>(i)), wb), -(i + 1)) *
                       zeta_ref(k + i, ctx);
            return acc / Real(BigInt(pow2_int(static_cast<unsigned long>(k - 1)) - 1), wb);
        },
        ref_zeta_param(2));

    add("Z3_ETA_ODD_21", FormulaTarget::zeta3, "",
        "odd-eta series with weight (2^(2j+1)-1)/(2^(2j-3)(2^(2j)-1))",
        ConvergenceClass::geometric, {},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 2; j <= T + 1; ++j) {
                Real num = Real(BigInt(pow2_int(static_cast<unsigned long>(2 * j + 1)) - 1), wb);
                Real den = Real(BigInt(pow2_int(static_cast<unsigned long>(2 * j - 3)) *
                                       (pow2_int(static_cast<unsigned long>(2 * j)) - 1)), wb);
                acc += num / den * (Real(2 * j, wb) * (2 * j - 1)) * eta_ref(2 * j + 1, ctx);
            }
            return acc / 21;
        },
        ref_zeta3);

    add("ETA_STEP", FormulaTarget::eta_n, "k: integer >= 1 (default 3)",
        "eta(k) from eta at shifted arguments", ConvergenceClass::geometric, {},
        [](const FormulaParams& p, long T, const PrecisionContext& ctx) {
            long k = p.get("k", 3);
            if (k < 1) throw DomainError("ETA_STEP: k must be >= 1");
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j) {
                Real den = Real(BigInt(pow2_int(static_cast<unsigned long>(k + j - 1)) - 1), wb);
                acc += Real(binomial(static_cast<unsigned long>(k + j - 1),
                                     static_cast<unsigned long>(j)), wb) /
                       den * eta_ref(k + j, ctx);
            }
            return ldexp(acc, -1);
        },
        ref_eta_param(1));

    add("ZK_MINUS1", FormulaTarget::zeta_n, "k: integer >= 3 (default 3)",
        "zeta(k) from binomial-weighted zeta tails", ConvergenceClass::geometric, {},
        [](const FormulaParams& p, long T, const PrecisionContext& ctx) {
            long k = p.get("k", 3);
            if (k < 3) throw DomainError("ZK_MINUS1: k must be >= 3");
            long wb = ctx.bits();
            Real acc(k, wb);
            for (long j = 1; j <= T; ++j)
                acc -= Real(binomial(static_cast<unsigned long>(j + k - 1),
                                     static_cast<unsigned long>(k - 2)), wb) *
                       zeta_minus_1(k + j, ctx);
            return acc / (k - 1);
        },
        ref_zeta_param(3));

    add("ONE_ZETA_TAIL", FormulaTarget::constant_identity, "k: integer >= 2 (default 2)",
        "unit identity: binomial-weighted zeta tails sum to 1",
        ConvergenceClass::geometric, {},
        [](const FormulaParams& p, long T, const PrecisionContext& ctx) {
            long k = p.get("k", 2);
            if (k < 2) throw DomainError("ONE_ZETA_TAIL: k must be >= 2");
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j)
                acc += Real(binomial(static_cast<unsigned long>(j + k - 1),
                                     static_cast<unsigned long>(j)), wb) *
                       zeta_minus_1(k + j, ctx);
            return acc;
        },
        [](const FormulaParams&, const PrecisionContext& ctx) { return Real(1, ctx.bits()); });

    add("Z3_ETA_GEOM", FormulaTarget::zeta3, "",
        "geometric eta series against 4 pi - 8 ln 2 - pi^2/3",
        ConvergenceClass::geometric, {PI, LN2},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real pi = const_pi(ctx);
            Real acc = 4 * pi - 8 * const_ln2(ctx) - pi * pi / 3;
            for (long j = 1; j <= T; ++j)
                acc -= ldexp(eta_ref(3 + j, ctx), -(j - 1));
            return Real(2, wb) / 3 * acc;
        },
        ref_zeta3);

    // ---- constant identities ------------------------------------------------

    add("CONST_QUARTER", FormulaTarget::constant_identity, "",
        "odd-eta quadratic series summing to 1/4", ConvergenceClass::power_law, {},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j)
                acc += eta_ref(2 * j - 1, ctx) / (Real(2 * j, wb) * (2 * j + 1));
            return acc;
        },
        [](const FormulaParams&, const PrecisionContext& ctx) {
            return Real(1, ctx.bits()) / 4;
        });

    add("CONST_LNPI2", FormulaTarget::constant_identity, "",
        "even-eta quadratic series summing to (1 - ln(pi/2))/2",
        ConvergenceClass::power_law, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j)
                acc += eta_ref(2 * j, ctx) / (Real(2 * j, wb) * (2 * j + 1));
            return acc;
        },
        [](const FormulaParams&, const PrecisionContext& ctx) {
            Real pi = const_pi(ctx);
            return ldexp(1 - log(ldexp(pi, -1)), -1);
        });

    add("CONST_PI4", FormulaTarget::constant_identity, "",
        "geometric eta series summing to pi/4", ConvergenceClass::geometric, {PI},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc(0, wb);
            for (long j = 1; j <= T; ++j) acc += ldexp(eta_ref(j, ctx), -j);
            return acc;
        },
        [](const FormulaParams&, const PrecisionContext& ctx) {
            return ldexp(const_pi(ctx), -2);
        });

    // ---- identities through gamma and Glaisher ------------------------------

    add("Z3_GAMMA_GLAISHER", FormulaTarget::zeta3, "",
        "odd-zeta series resolved by Euler gamma and the Glaisher constant",
        ConvergenceClass::power_law,
        {ConstantId::euler_gamma, ConstantId::glaisher_A},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real acc = Real(-4, wb) - 3 * constant(ConstantId::euler_gamma, ctx) +
                       36 * log(constant(ConstantId::glaisher_A, ctx));
            for (long j = 2; j <= T + 1; ++j)
                acc -= 6 * zeta_ref(2 * j + 1, ctx) / (Real(j + 1, wb) * (j + 2));
            return acc;
        },
        ref_zeta3);

    add("Z3_GAMMA_GLAISHER2", FormulaTarget::zeta3, "",
        "all-zeta companion of the gamma/Glaisher identity",
        ConvergenceClass::power_law,
        {ConstantId::pi, ConstantId::euler_gamma, ConstantId::glaisher_A},
        [](const FormulaParams&, long T, const PrecisionContext& ctx) {
            long wb = ctx.bits();
            Real pi = const_pi(ctx);
            Real acc = -Real(5, wb) / 18 * pi * pi -
                       Real(10, wb) / 3 * constant(ConstantId::euler_gamma, ctx) +
                       40 * log(constant(ConstantId::glaisher_A, ctx));
            for (long j = 4; j <= T + 3; ++j)
                acc -= 20 * zeta_ref(j, ctx) / (Real(j + 1, wb) * (j + 2));
            return acc;
        },
        ref_zeta3);

    add("BERN_FROM_ETA", FormulaTarget::constant_identity,
        "j: integer >= 1 (default 1); Bernoulli index 2j",
        "B_2j recovered from the factorial-ratio eta limit",
        ConvergenceClass::dynamic, {PI},
        [](const FormulaParams& p, long n, const PrecisionContext& ctx) {
            long j = p.get("j", 1);
            if (j < 1) throw DomainError("BERN_FROM_ETA: j must be >= 1");
            long wb = ctx.bits();
            Real s = eta_factorial_limit(2 * j, n, ctx);
            Real pref = Real(factorial(static_cast<unsigned long>(2 * j)), wb) /
                        (Real(BigInt(pow2_int(static_cast<unsigned long>(2 * j - 1)) - 1), wb) *
                         pow(const_pi(ctx), 2 * j));
            Real v = pref * s;
            if (j % 2 == 0) v.neg(); // (-1)^(j+1)
            return v;
        },
        [](const FormulaParams& p, const PrecisionContext& ctx) {
            long j = p.get("j", 1);
            return Real(bernoulli(2 * j), ctx.bits());
        });

    return reg;
}

} // namespace detail

// ---------------------------------------------------------------------------
// JSON export
// ---------------------------------------------------------------------------

inline std::string descriptor_json(const FormulaDescriptor& d) {
    std::string s = "{\"id\": \"" + d.id + "\", \"target\": \"" + target_name(d.target) +
                    "\", \"params\": \"" + d.params_schema + "\", \"citation\": \"" + d.citation +
                    "\", \"convergence\": \"" + convergence_name(d.convergence) +
                    "\", \"requires\": [";
    for (size_t i = 0; i < d.requires_constants.size(); ++i) {
        if (i) s += ", ";
        s += std::string("\"") + constant_name(d.requires_constants[i]) + "\"";
    }
    return s + "]}";
}

inline std::string registry_json() {
    std::string s = "[";
    const auto& reg = list_formulas();
    for (size_t i = 0; i < reg.size(); ++i) {
        if (i) s += ", ";
        s += descriptor_json(reg[i]);
    }
    return s + "]";
}

inline std::string evaluation_json(const EvaluationResult& r) {
    std::string s = "{\"formula_id\": \"" + r.formula_id + "\", \"value\": \"" +
                    r.value.str(r.digits_requested) + "\", \"terms\": " + std::to_string(r.terms) +
                    ", \"digits_requested\": " + std::to_string(r.digits_requested) +
                    ", \"digits_internal\": " + std::to_string(r.digits_internal);
    if (r.has_reference)
        s += ", \"abs_error_vs_ref\": \"" + r.abs_error_vs_ref.str(6) + "\"";
    s += ", \"elapsed_seconds\": " + std::to_string(r.elapsed_seconds) + "}";
    return s;
}

} // namespace zetaforge

#endif
