#ifndef ZETAFORGE_REAL_HPP
#define ZETAFORGE_REAL_HPP

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <utility>

#include "zetaforge/context.hpp"
#include "zetaforge/errors.hpp"

namespace zetaforge {

// Arbitrary-precision real backed by MPFR, round-to-nearest throughout.
// Binary-op results carry max(operand precisions), so precision set by the
// context at construction propagates through a computation.
class Real {
public:
    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }

    explicit Real(long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_zero(v_, 1);
    }

    Real(long value, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_si(v_, value, MPFR_RNDN);
    }

    Real(const mpz_class& value, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    Real(const mpq_class& value, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }

    Real(const std::string& decimal, long prec_bits) {
        mpfr_init2(v_, clamp(prec_bits));
        if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
            throw DomainError("Real: cannot parse decimal string '" + decimal + "'");
    }

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }

    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }

    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    long prec() const { return mpfr_get_prec(v_); }

    // --- queries ---
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp(long o) const { return mpfr_cmp_si(v_, o); }

    // --- in-place arithmetic ---
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
    Real& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

    Real& neg() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

    // Copy rounded to a different binary precision.
    Real rounded(long prec_bits) const {
        Real r(prec_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    // --- string I/O (locale-independent, '.' radix point) ---
    // Plain notation when the exponent is moderate, scientific otherwise.
    std::string str(int digits) const {
        if (digits < 1) digits = 1;
        if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
        if (is_zero()) return "0";
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        bool negative = !mant.empty() && mant[0] == '-';
        std::string d = negative ? mant.substr(1) : mant;
        // strip trailing zeros but keep at least one digit
        size_t last = d.find_last_not_of('0');
        d = d.substr(0, std::max<size_t>(last + 1, 1));
        std::string out;
        long exp10 = static_cast<long>(e); // value = 0.d1d2... * 10^e
        if (exp10 >= -3 && exp10 <= digits + 4) {
            if (exp10 <= 0) {
                out = "0." + std::string(static_cast<size_t>(-exp10), '0') + d;
            } else if (static_cast<size_t>(exp10) >= d.size()) {
                out = d + std::string(static_cast<size_t>(exp10) - d.size(), '0');
            } else {
                out = d.substr(0, static_cast<size_t>(exp10)) + "." + d.substr(static_cast<size_t>(exp10));
            }
        } else {
            out = d.substr(0, 1);
            if (d.size() > 1) out += "." + d.substr(1);
            out += "e" + std::to_string(exp10 - 1);
        }
        return negative ? "-" + out : out;
    }

private:
    static long clamp(long bits) { return std::max<long>(bits, MPFR_PREC_MIN); }
    mpfr_t v_;
};

inline long result_prec(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

#define ZETAFORGE_BINOP(op, fn)                                            \
    inline Real operator op(const Real& a, const Real& b) {                \
        Real r(result_prec(a, b));                                         \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                          \
        return r;                                                          \
    }

ZETAFORGE_BINOP(+, mpfr_add)
ZETAFORGE_BINOP(-, mpfr_sub)
ZETAFORGE_BINOP(*, mpfr_mul)
ZETAFORGE_BINOP(/, mpfr_div)
#undef ZETAFORGE_BINOP

#define ZETAFORGE_BINOP_SI(op, fn, rfn)                                    \
    inline Real operator op(const Real& a, long b) {                       \
        Real r(a.prec());                                                  \
        fn(r.raw(), a.raw(), b, MPFR_RNDN);                                \
        return r;                                                          \
    }                                                                      \
    inline Real operator op(long a, const Real& b) {                       \
        Real r(b.prec());                                                  \
        rfn;                                                               \
        return r;                                                          \
    }

ZETAFORGE_BINOP_SI(+, mpfr_add_si, mpfr_add_si(r.raw(), b.raw(), a, MPFR_RNDN))
ZETAFORGE_BINOP_SI(-, mpfr_sub_si, mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN))
ZETAFORGE_BINOP_SI(*, mpfr_mul_si, mpfr_mul_si(r.raw(), b.raw(), a, MPFR_RNDN))
ZETAFORGE_BINOP_SI(/, mpfr_div_si, mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN))
#undef ZETAFORGE_BINOP_SI

inline Real operator-(const Real& a) {
    Real r(a);
    return r.neg();
}

inline bool operator<(const Real& a, const Real& b) { return a.cmp(b) < 0; }
inline bool operator>(const Real& a, const Real& b) { return a.cmp(b) > 0; }
inline bool operator<=(const Real& a, const Real& b) { return a.cmp(b) <= 0; }
inline bool operator>=(const Real& a, const Real& b) { return a.cmp(b) >= 0; }
inline bool operator==(const Real& a, const Real& b) { return a.cmp(b) == 0; }
inline bool operator!=(const Real& a, const Real& b) { return a.cmp(b) != 0; }
inline bool operator<(const Real& a, long b) { return a.cmp(b) < 0; }
inline bool operator>(const Real& a, long b) { return a.cmp(b) > 0; }
inline bool operator<=(const Real& a, long b) { return a.cmp(b) <= 0; }
inline bool operator>=(const Real& a, long b) { return a.cmp(b) >= 0; }
inline bool operator==(const Real& a, long b) { return a.cmp(b) == 0; }

#define ZETAFORGE_UNFN(name, fn)                  \
    inline Real name(const Real& a) {             \
        Real r(a.prec());                         \
        fn(r.raw(), a.raw(), MPFR_RNDN);          \
        return r;                                 \
    }

ZETAFORGE_UNFN(abs, mpfr_abs)
ZETAFORGE_UNFN(sqrt, mpfr_sqrt)
ZETAFORGE_UNFN(exp, mpfr_exp)
ZETAFORGE_UNFN(expm1, mpfr_expm1)
ZETAFORGE_UNFN(log, mpfr_log)
ZETAFORGE_UNFN(log1p, mpfr_log1p)
ZETAFORGE_UNFN(sin, mpfr_sin)
ZETAFORGE_UNFN(cos, mpfr_cos)
ZETAFORGE_UNFN(tan, mpfr_tan)
ZETAFORGE_UNFN(asin, mpfr_asin)
ZETAFORGE_UNFN(acos, mpfr_acos)
ZETAFORGE_UNFN(atan, mpfr_atan)
ZETAFORGE_UNFN(atanh, mpfr_atanh)
ZETAFORGE_UNFN(sinh, mpfr_sinh)
ZETAFORGE_UNFN(cosh, mpfr_cosh)
ZETAFORGE_UNFN(tanh, mpfr_tanh)
#undef ZETAFORGE_UNFN

inline Real floor_r(const Real& a) {
    Real r(a.prec());
    mpfr_floor(r.raw(), a.raw());
    return r;
}

inline Real pow(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

inline Real pow(const Real& a, const Real& e) {
    Real r(result_prec(a, e));
    mpfr_pow(r.raw(), a.raw(), e.raw(), MPFR_RNDN);
    return r;
}

// x - floor(x), representative in [0, 1)
inline Real frac(const Real& a) {
    Real f = floor_r(a);
    return a - f;
}

inline Real ldexp(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

// 2^k at the given precision (exact)
inline Real pow2(long k, long prec_bits) {
    Real r(1, prec_bits);
    return ldexp(r, k);
}

} // namespace zetaforge

#endif
