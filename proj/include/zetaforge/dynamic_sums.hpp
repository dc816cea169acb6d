#ifndef ZETAFORGE_DYNAMIC_SUMS_HPP
#define ZETAFORGE_DYNAMIC_SUMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zetaforge/constants.hpp"
#include "zetaforge/sign_sequence.hpp"
#include "zetaforge/specials.hpp"

namespace zetaforge {

// Exact integer matrix expressing the inverse-cube sine terms of S_n in the
// basis of depth-(n-1) elementary radicals (ordered by increasing angle).
// inverse_cubes = scale * M * basis, and S_n = 2^-(3n-3) * sum(inverse_cubes).
struct TransformMatrix {
    long n = 0;                                // depth index; dimension 2^(n-2)
    BigRat scale = make_rat(1, 2);
    std::vector<std::vector<std::int64_t>> entries;

    long dim() const { return static_cast<long>(entries.size()); }
};

inline constexpr long transform_matrix_min_n = 3;
inline constexpr long transform_matrix_max_n = 12;

// Generator construction: r = (i+j-1)(2i-1)^(N-1) mod 2N with N = 2^(n-2);
// entry = sign * (2Nr - r^2 + r - N)/2 where the sign exponent
// (r(2i-1)-(i+j-1))/(2N) is an exact integer.
inline TransformMatrix make_transform_matrix(long n) {
    if (n < transform_matrix_min_n || n > transform_matrix_max_n)
        throw ConfigError("make_transform_matrix: n must be in [3, 12]");
    const long N = 1L << (n - 2);
    TransformMatrix m;
    m.n = n;
    m.scale = make_rat(1, 2);
    m.entries.assign(static_cast<size_t>(N), std::vector<std::int64_t>(static_cast<size_t>(N)));
    for (long i = 1; i <= N; ++i) {
        long base = powmod_long(2 * i - 1, N - 1, 2 * N);
        for (long j = 1; j <= N; ++j) {
            long r = ((i + j - 1) % (2 * N)) * base % (2 * N);
            long num = r * (2 * i - 1) - (i + j - 1);
            long expo = num / (2 * N);
            std::int64_t mag = (2 * N * r - r * r + r - N) / 2;
            m.entries[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                (expo % 2 == 0) ? mag : -mag;
        }
    }
    return m;
}

// Closed-form entry: with t = (i+j-1)(2i-1)^(N-1), r = t mod 2N,
// entry = (-1)^floor(t/2N) * ((2N+1) r - r^2 - N)/2.  Must agree with the
// generator entrywise (the two index derivations are independent).
inline std::int64_t matrix_entry_closed_form(long n, long i, long j) {
    if (n < transform_matrix_min_n || n > transform_matrix_max_n)
        throw ConfigError("matrix_entry_closed_form: n must be in [3, 12]");
    const long N = 1L << (n - 2);
    if (i < 1 || i > N || j < 1 || j > N)
        throw DomainError("matrix_entry_closed_form: index out of range");
    // t mod 4N gives both r = t mod 2N and the parity of floor(t/2N)
    long t4 = ((i + j - 1) % (4 * N)) * powmod_long(2 * i - 1, N - 1, 4 * N) % (4 * N);
    long r = t4 % (2 * N);
    long par = (t4 >= 2 * N) ? 1 : 0;
    std::int64_t mag = ((2 * N + 1) * r - r * r - N) / 2;
    return par == 0 ? mag : -mag;
}

enum class SumRoute { direct_sine, nested_radical, matrix_basis };

inline const char* route_name(SumRoute r) {
    switch (r) {
        case SumRoute::direct_sine: return "direct_sine";
        case SumRoute::nested_radical: return "nested_radical";
        case SumRoute::matrix_basis: return "matrix_basis";
    }
    return "?";
}

struct DynamicSumResult {
    long n = 0;
    Real value;
    SumRoute route = SumRoute::direct_sine;
};

// The depth-(n-1) elementary radicals entering S_n, ordered by angle.
inline std::vector<SignSequence> basis_sequences(long n) {
    std::vector<SignSequence> out;
    const long N = 1L << (n - 2);
    out.reserve(static_cast<size_t>(N));
    for (long j = 1; j <= N; ++j) out.push_back(seq_of_angle(2 * j - 1, n));
    return out;
}

// S_n = sum_{i=1}^{2^(n-2)} (2^n sin((2i-1) pi / 2^n))^-3 by the chosen route.
inline DynamicSumResult dynamic_sum(long n, SumRoute route, const PrecisionContext& ctx) {
    if (n < 2) throw DomainError("dynamic_sum: n must be >= 2");
    if (route == SumRoute::matrix_basis && n < 3)
        throw DomainError("dynamic_sum: matrix_basis route needs n >= 3");
    long wb = ctx.bits();
    const long count = 1L << (n - 2);
    Real s(0, wb);
    switch (route) {
        case SumRoute::direct_sine: {
            Real pi = const_pi(ctx);
            for (long i = 1; i <= count; ++i) {
                Real ang = pi * (2 * i - 1);
                ang = ldexp(ang, -n);
                s += pow(ldexp(sin(ang), n), -3);
            }
            break;
        }
        case SumRoute::nested_radical: {
            for (long i = 1; i <= count; ++i) {
                Real v = elementary_value(seq_of_angle(2 * i - 1, n), ctx);
                s += pow(v, -3);
            }
            s = ldexp(s, -(3 * n - 3));
            break;
        }
        case SumRoute::matrix_basis: {
            if (n > transform_matrix_max_n)
                throw ConfigError("dynamic_sum: matrix route capped at n = 12");
            TransformMatrix m = make_transform_matrix(n);
            std::vector<Real> basis;
            basis.reserve(static_cast<size_t>(count));
            for (auto& seq : basis_sequences(n)) basis.push_back(elementary_value(seq, ctx));
            for (long i = 0; i < count; ++i) {
                Real row(0, wb);
                for (long j = 0; j < count; ++j)
                    row += m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                           basis[static_cast<size_t>(j)];
                s += row;
            }
            s *= Real(m.scale, wb);      // inverse cubes = scale * M * basis
            s = ldexp(s, -(3 * n - 3)); // S_n = 2^-(3n-3) * sum
            break;
        }
    }
    return DynamicSumResult{n, s, route};
}

// (8 pi^3 / 7) S_n -> zeta(3)
inline Real zeta3_from_dynamic(long n, const PrecisionContext& ctx,
                               SumRoute route = SumRoute::direct_sine) {
    Real pi = const_pi(ctx);
    return ldexp(pow(pi, 3), 3) / 7 * dynamic_sum(n, route, ctx).value;
}

// {"n": ..., "scale": "1/2", "entries": [[...]]}
inline std::string transform_matrix_json(const TransformMatrix& m) {
    std::string s = "{\"n\": " + std::to_string(m.n) + ", \"scale\": \"" + rat_str(m.scale) +
                    "\", \"entries\": [";
    for (size_t i = 0; i < m.entries.size(); ++i) {
        s += i ? ", [" : "[";
        for (size_t j = 0; j < m.entries[i].size(); ++j) {
            if (j) s += ", ";
            s += std::to_string(m.entries[i][j]);
        }
        s += "]";
    }
    return s + "]}";
}

} // namespace zetaforge

#endif
