#ifndef ZETAFORGE_LINEAR_SYSTEMS_HPP
#define ZETAFORGE_LINEAR_SYSTEMS_HPP

#include <string>
#include <vector>

#include "zetaforge/rational.hpp"
#include "zetaforge/specials.hpp"

namespace zetaforge {

// Coupling coefficients of the odd-zeta recurrence
//   alpha(2i+1) = sum_{j>=1} A(i,j) alpha(2i+1+2j),
// A(i,j) = C(2(i+j), 2i) / (2^(2j) (2^(2i) - 1)), exact.
inline BigRat alpha_coupling(long i, long j) {
    if (i < 1 || j < 1) throw DomainError("alpha_coupling: indices start at 1");
    BigInt num = binomial(static_cast<unsigned long>(2 * (i + j)),
                          static_cast<unsigned long>(2 * i));
    BigInt den = pow2_int(static_cast<unsigned long>(2 * j)) *
                 (pow2_int(static_cast<unsigned long>(2 * i)) - 1);
    return make_rat(num, den);
}

enum class TailModel { zeros, ones, oracle };

inline const char* tail_model_name(TailModel t) {
    switch (t) {
        case TailModel::zeros: return "zeros";
        case TailModel::ones: return "ones";
        case TailModel::oracle: return "oracle";
    }
    return "?";
}

inline TailModel tail_model_from_name(const std::string& s) {
    if (s == "zeros") return TailModel::zeros;
    if (s == "ones") return TailModel::ones;
    if (s == "oracle") return TailModel::oracle;
    throw DomainError("unknown tail model '" + s + "'");
}

// Truncated system K x = v over variables (alpha(3), alpha(5), ..., alpha(2n+1)):
// unit diagonal, K[i][i+j] = -A(i,j).  The right-hand side depends on how the
// dropped tail alpha(2n+3), alpha(2n+5), ... is modeled.
struct TriangularSystem {
    long n = 0;
    TailModel tail = TailModel::ones;
    std::vector<std::vector<BigRat>> matrix; // n x n, exact

    std::string json() const {
        std::string s = "{\"n\": " + std::to_string(n) + ", \"tail_model\": \"" +
                        tail_model_name(tail) + "\", \"matrix\": [";
        for (size_t i = 0; i < matrix.size(); ++i) {
            s += i ? ", [" : "[";
            for (size_t j = 0; j < matrix[i].size(); ++j) {
                if (j) s += ", ";
                s += "\"" + rat_str(matrix[i][j]) + "\"";
            }
            s += "]";
        }
        return s + "]}";
    }
};

inline TriangularSystem build_system(long n, TailModel tail) {
    if (n < 2) throw DomainError("build_system: n must be >= 2");
    TriangularSystem sys;
    sys.n = n;
    sys.tail = tail;
    sys.matrix.assign(static_cast<size_t>(n), std::vector<BigRat>(static_cast<size_t>(n), BigRat(0)));
    for (long i = 1; i <= n; ++i) {
        sys.matrix[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = BigRat(1);
        for (long j = 1; i + j <= n; ++j)
            sys.matrix[static_cast<size_t>(i - 1)][static_cast<size_t>(i + j - 1)] =
                -alpha_coupling(i, j);
    }
    return sys;
}

namespace detail {

// Right-hand side entry for row i of the size-n system.
//  zeros : 0 (solution collapses to the zero vector; kept as the baseline)
//  ones  : the dropped tail with every alpha replaced by its limit 1
//  oracle: the dropped tail with reference alpha values
// A single-term rhs A(i, n+1-i) keeps a vanishing fraction of each row's
// mass, and the compounding truncation drives the solution to zero; the
// multi-term rhs is the workable form, so `ones` sums the whole tail.
inline Real system_rhs(long n, long i, TailModel tail, const PrecisionContext& ctx) {
    long wb = ctx.bits();
    switch (tail) {
        case TailModel::zeros:
            return Real(0, wb);
        case TailModel::ones: {
            Real acc(0, wb);
            Real eps = ldexp(Real(1, wb), -(ctx.bits() + 8));
            for (long j = n + 1 - i;; ++j) {
                Real c(alpha_coupling(i, j), wb);
                if (c < eps && j > n + 2 - i) break;
                acc += c;
            }
            return acc;
        }
        case TailModel::oracle: {
            Real acc(0, wb);
            Real eps = ldexp(Real(1, wb), -(ctx.bits() + 8));
            for (long j = n + 1 - i;; ++j) {
                Real c(alpha_coupling(i, j), wb);
                if (c < eps && j > n + 2 - i) break;
                acc += c * alpha_odd(2 * i + 1 + 2 * j, ctx);
            }
            return acc;
        }
    }
    return Real(0, wb);
}

} // namespace detail

// Back-substitution for alpha(3) = (7/8) zeta(3).
inline Real solve_alpha3(long n, TailModel tail, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("solve_alpha3: n must be >= 2");
    long wb = ctx.bits();
    std::vector<Real> x(static_cast<size_t>(n), Real(0, wb));
    for (long i = n; i >= 1; --i) {
        Real acc = detail::system_rhs(n, i, tail, ctx);
        for (long j = 1; i + j <= n; ++j)
            acc += Real(alpha_coupling(i, j), wb) * x[static_cast<size_t>(i + j - 1)];
        x[static_cast<size_t>(i - 1)] = acc;
    }
    return x[0];
}

// First row of K^-1 as exact rationals, by the increasing-path expansion:
// w_1 = 1, w_r = sum_{t<r} w_t A(t, r-t).
inline std::vector<BigRat> u_row(long n) {
    if (n < 1) throw DomainError("u_row: n must be >= 1");
    std::vector<BigRat> w(static_cast<size_t>(n));
    w[0] = BigRat(1);
    for (long r = 2; r <= n; ++r) {
        BigRat acc(0);
        for (long t = 1; t < r; ++t) acc += w[static_cast<size_t>(t - 1)] * alpha_coupling(t, r - t);
        w[static_cast<size_t>(r - 1)] = acc;
    }
    return w;
}

// Exact first row of the inverse by independent elimination: solve K z = e_c
// by back-substitution for each column c and take z_1.
inline std::vector<BigRat> inverse_first_row_by_elimination(long n) {
    TriangularSystem sys = build_system(n, TailModel::zeros);
    std::vector<BigRat> out(static_cast<size_t>(n));
    for (long c = 1; c <= n; ++c) {
        std::vector<BigRat> z(static_cast<size_t>(n), BigRat(0));
        for (long i = n; i >= 1; --i) {
            BigRat acc = (i == c) ? BigRat(1) : BigRat(0);
            for (long j = i + 1; j <= n; ++j)
                acc -= sys.matrix[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] *
                       z[static_cast<size_t>(j - 1)];
            z[static_cast<size_t>(i - 1)] = acc;
        }
        out[static_cast<size_t>(c - 1)] = z[0];
    }
    return out;
}

} // namespace zetaforge

#endif
