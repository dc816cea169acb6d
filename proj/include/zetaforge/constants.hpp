#ifndef ZETAFORGE_CONSTANTS_HPP
#define ZETAFORGE_CONSTANTS_HPP

#include <map>
#include <mutex>
#include <string>

#include "zetaforge/real.hpp"
#include "zetaforge/rational.hpp"

namespace zetaforge {

enum class ConstantId { pi, ln2, euler_gamma, catalan_G, glaisher_A };

inline const char* constant_name(ConstantId id) {
    switch (id) {
        case ConstantId::pi: return "pi";
        case ConstantId::ln2: return "ln2";
        case ConstantId::euler_gamma: return "euler_gamma";
        case ConstantId::catalan_G: return "catalan_G";
        case ConstantId::glaisher_A: return "glaisher_A";
    }
    return "?";
}

inline ConstantId constant_from_name(const std::string& s) {
    if (s == "pi") return ConstantId::pi;
    if (s == "ln2") return ConstantId::ln2;
    if (s == "euler_gamma") return ConstantId::euler_gamma;
    if (s == "catalan_G") return ConstantId::catalan_G;
    if (s == "glaisher_A") return ConstantId::glaisher_A;
    throw DomainError("unknown constant '" + s + "'");
}

namespace detail {

// Gauss-Legendre / Brent-Salamin AGM iteration; doubles correct digits per step.
inline Real pi_agm(long bits) {
    long wb = bits + 64;
    Real a(1, wb);
    Real b = 1 / sqrt(Real(2, wb));
    Real t = Real(1, wb) / 4;
    Real eps = ldexp(Real(1, wb), -(bits + 16));
    for (long it = 0; it < 40; ++it) {
        Real an = ldexp(a + b, -1);
        Real d = a - an;
        b = sqrt(a * b);
        t -= ldexp(d * d, it); // p_n = 2^n
        a = an;
        if (abs(a - b) < eps) break;
    }
    Real s = a + b;
    return (s * s / (4 * t)).rounded(bits);
}

// atan(1/m) by direct Taylor series, exact integer powers of m.
inline Real atan_inv(long m, long bits) {
    long wb = bits + 64;
    Real x = Real(1, wb) / m;
    Real x2 = x * x;
    Real term = x, sum = x;
    long k = 1;
    Real eps = ldexp(Real(1, wb), -(bits + 32));
    while (abs(term) > eps) {
        term *= x2;
        sum += (k % 2 == 1 ? -term : term) / (2 * k + 1);
        ++k;
    }
    return sum.rounded(bits);
}

// Machin: pi = 16 atan(1/5) - 4 atan(1/239)
inline Real pi_machin(long bits) {
    long wb = bits + 32;
    Real p = 16 * atan_inv(5, wb) - 4 * atan_inv(239, wb);
    return p.rounded(bits);
}

// ln 2 = 2 atanh(1/3) = 2 sum_{k>=0} 3^-(2k+1)/(2k+1)
inline Real ln2_series(long bits) {
    long wb = bits + 64;
    Real x = Real(1, wb) / 3;
    Real x2 = x * x;
    Real term = x, sum = x;
    long k = 1;
    Real eps = ldexp(Real(1, wb), -(bits + 32));
    while (term > eps) {
        term *= x2;
        sum += term / (2 * k + 1);
        ++k;
    }
    return ldexp(sum, 1).rounded(bits);
}

// G = (3/8) sum_{n>=0} 1/(binom(2n,n)(2n+1)^2) + (pi/8) ln(2+sqrt(3))
inline Real catalan_series(long bits) {
    long wb = bits + 64;
    Real sum(0, wb);
    BigInt central(1); // binom(2n, n)
    double bits_per_term = 2.0;
    long nmax = static_cast<long>(wb / bits_per_term) + 16;
    for (long n = 0; n <= nmax; ++n) {
        BigInt den = central * ((2 * n + 1) * (2 * n + 1));
        sum += 1 / Real(den, wb);
        central = central * 2 * (2 * n + 1) / (n + 1);
    }
    Real pi = pi_agm(wb);
    Real g = Real(3, wb) / 8 * sum + pi / 8 * log(2 + sqrt(Real(3, wb)));
    return g.rounded(bits);
}

// Euler-Mascheroni and Glaisher-Kinkelin constants are stored; they enter only
// two catalog identities.  Digits from mpmath 1.3 (mp.euler / mp.glaisher),
// each confirmed there by a second route (integral representation of gamma,
// exp(1/12 - zeta'(-1)) for A); the unit tests recompute both in-tree.
inline constexpr int stored_digits = 200;

inline const char* gamma_literal_primary =
    "0.57721566490153286060651209008240243104215933593992359880576723488486"
    "7726777664670936947063291746749514631447249807082480960504014486542836"
    "2241739976449235362535003337429373377376739427925952582470949160087352"
    "03948";

inline const char* gamma_literal_secondary =
    "0.57721566490153286060651209008240243104215933593992359880576723488486"
    "7726777664670936947063291746749514631447249807082480960504014486542836"
    "2241739976449235362535003337429373377376739427925952582470949160087352"
    "03948";

inline const char* glaisher_literal_primary =
    "1.28242712910062263687534256886979172776768892732500119206374002174040"
    "6308858826461129736491958202374394206461203990007489331577913627752804"
    "0415907257386172752214334327143439787335067915257366856907876561146686"
    "4500";

inline const char* glaisher_literal_secondary =
    "1.28242712910062263687534256886979172776768892732500119206374002174040"
    "6308858826461129736491958202374394206461203990007489331577913627752804"
    "0415907257386172752214334327143439787335067915257366856907876561146686"
    "4500";

// The two literals agree through stored_digits; the last few digits differ by
// rounding of the generating routes and are never exposed.
inline void check_stored_pair(const char* lit1, const char* lit2, const char* what) {
    Real a(lit1, PrecisionContext::bits_for(stored_digits + 6));
    Real b(lit2, PrecisionContext::bits_for(stored_digits + 6));
    Real tol("1e-" + std::to_string(stored_digits), 64);
    if (abs(a - b) > tol)
        throw InconsistencyError(std::string("stored literals for ") + what + " disagree");
}

inline void check_gamma_against_mpfr(long bits) {
    Real mine(gamma_literal_primary, bits);
    Real ref(bits);
    mpfr_const_euler(ref.raw(), MPFR_RNDN);
    Real tol = ldexp(Real(1, 64), -(bits - 8));
    if (abs(mine - ref) > tol)
        throw InconsistencyError("stored euler_gamma literal fails cross-check");
}

struct ConstantCache {
    std::mutex mu;
    std::map<std::pair<int, long>, Real> values; // (id, bits) -> value
    bool literals_checked = false;
};

inline ConstantCache& constant_cache() {
    static ConstantCache c;
    return c;
}

} // namespace detail

// Named constant to ctx precision.  pi/ln2/catalan_G are computed;
// euler_gamma/glaisher_A come from the stored literals above and are
// cross-checked on first use.
inline Real constant(ConstantId id, const PrecisionContext& ctx) {
    long bits = ctx.bits();
    auto& cache = detail::constant_cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto key = std::make_pair(static_cast<int>(id), bits);
    auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;

    Real v;
    switch (id) {
        case ConstantId::pi:
            v = detail::pi_agm(bits);
            break;
        case ConstantId::ln2:
            v = detail::ln2_series(bits);
            break;
        case ConstantId::catalan_G:
            v = detail::catalan_series(bits);
            break;
        case ConstantId::euler_gamma:
        case ConstantId::glaisher_A: {
            if (!cache.literals_checked) {
                detail::check_stored_pair(detail::gamma_literal_primary,
                                          detail::gamma_literal_secondary, "euler_gamma");
                detail::check_stored_pair(detail::glaisher_literal_primary,
                                          detail::glaisher_literal_secondary, "glaisher_A");
                detail::check_gamma_against_mpfr(PrecisionContext::bits_for(detail::stored_digits));
                cache.literals_checked = true;
            }
            if (ctx.digits() + ctx.guard() > detail::stored_digits)
                throw AccuracyError(std::string(constant_name(id)) +
                                    " is stored to 200 digits; requested precision exceeds that");
            v = Real(id == ConstantId::euler_gamma ? detail::gamma_literal_primary
                                                   : detail::glaisher_literal_primary,
                     bits);
            break;
        }
    }
    cache.values.emplace(key, v);
    return v;
}

inline Real const_pi(const PrecisionContext& ctx) { return constant(ConstantId::pi, ctx); }
inline Real const_ln2(const PrecisionContext& ctx) { return constant(ConstantId::ln2, ctx); }

} // namespace zetaforge

#endif
