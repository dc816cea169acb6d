#ifndef ZETAFORGE_RATIONAL_HPP
#define ZETAFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "zetaforge/errors.hpp"

namespace zetaforge {

// Exact arithmetic lives on GMP types: mpz_class integers, mpq_class rationals
// (always canonicalized, denominator > 0).
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    if (k > n) return BigInt(0);
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// C(n, k) for arbitrary (possibly large) integer n >= 0 held in a BigInt
inline BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt pow_int(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// 2^k as exact integer
inline BigInt pow2_int(unsigned long k) {
    BigInt r(1);
    r <<= k;
    return r;
}

inline long powmod_long(long base, long e, long mod) {
    BigInt b(base), m(mod), r;
    mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e), m.get_mpz_t());
    return r.get_si();
}

// "p/q" or plain "p" when q == 1
inline std::string rat_str(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline BigRat parse_rat(const std::string& s) {
    BigRat q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw DomainError("cannot parse rational '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace zetaforge

#endif
