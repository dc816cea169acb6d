#include "test_util.hpp"

#include "zetaforge/linear_systems.hpp"
#include "zetaforge/reversion.hpp"

using namespace zetaforge;
using zftest::close_digits;

namespace {

PowerSeries from_longs(std::initializer_list<long> cs, long bits) {
    std::vector<Real> v;
    for (long c : cs) v.emplace_back(c, bits);
    return PowerSeries(std::move(v));
}

} // namespace

TEST_CASE("series multiply / reciprocal / compose basics") {
    long bits = PrecisionContext(30).bits();
    auto a = from_longs({1, 2, 1}, bits);          // (1+x)^2
    auto b = from_longs({1, -1}, bits);            // 1-x
    auto p = mul(a, b, 4);                         // (1+x)^2(1-x) = 1+x-x^2-x^3
    CHECK(p[0] == Real(1, bits));
    CHECK(p[1] == Real(1, bits));
    CHECK(p[2] == Real(-1, bits));
    CHECK(p[3] == Real(-1, bits));

    auto r = reciprocal(b, 6); // 1/(1-x) = sum x^k
    for (size_t k = 0; k <= 6; ++k) CHECK(close_digits(r[k], Real(1, bits), 28));

    auto inner = from_longs({0, 1, 1}, bits); // x + x^2
    auto comp = compose(b, inner, 4);         // 1 - x - x^2
    CHECK(close_digits(comp[0], Real(1, bits), 28));
    CHECK(close_digits(comp[1], Real(-1, bits), 28));
    CHECK(close_digits(comp[2], Real(-1, bits), 28));
    CHECK(close_digits(comp[3], Real(0, bits), 28));

    auto d = derivative(a);
    CHECK(d[0] == Real(2, bits));
    CHECK(d[1] == Real(2, bits));
}

TEST_CASE("reversion: identity and x + x^2") {
    long bits = PrecisionContext(40).bits();
    auto idty = from_longs({0, 1}, bits);
    auto g = revert_series(idty, 6);
    CHECK(close_digits(g[1], Real(1, bits), 38));
    for (size_t k = 2; k <= 6; ++k) CHECK(close_digits(g[k], Real(0, bits), 38));

    // f = x + x^2: g = x - x^2 + 2x^3 - 5x^4 + 14x^5 - 42x^6 (Catalan signs)
    auto f = from_longs({0, 1, 1}, bits);
    auto h = revert_series(f, 6);
    long expect[] = {0, 1, -1, 2, -5, 14, -42};
    for (size_t k = 1; k <= 6; ++k) CHECK(close_digits(h[k], Real(expect[k], bits), 36));

    // brute-force composition check g(f(x)) = x through order 6
    auto comp = compose(h, f, 6);
    CHECK(close_digits(comp[1], Real(1, bits), 36));
    for (size_t k = 0; k <= 6; ++k)
        if (k != 1) CHECK(close_digits(comp[k], Real(0, bits), 36));

    CHECK_THROWS_AS(revert_series(from_longs({1, 1}, bits), 4), DomainError);
    CHECK_THROWS_AS(revert_series(from_longs({0, 0, 1}, bits), 4), DomainError);
}

TEST_CASE("reverted zeta(3) series: printed leading coefficients") {
    auto ctx = make_context(40);
    size_t N = 8;
    auto g = revert_series(zeta3_generating_series(N, ctx), N);
    long wb = g.bits();
    Real pi = const_pi(ctx).rounded(wb);
    Real pi2 = pi * pi;
    Real c1 = 7 / pi;
    Real c2 = 49 / (4 * pow(pi, 3));
    Real c3 = -343 * (pi2 - 9) / (72 * pow(pi, 5));
    Real c4 = -2401 * (7 * pi2 - 45) / (576 * pow(pi, 7));
    Real c5 = 16807 * (4725 - 900 * pi2 + 29 * pi2 * pi2) / (86400 * pow(pi, 9));
    CHECK(close_digits(g[1] / c1, Real(1, wb), 25));
    CHECK(close_digits(g[2] / c2, Real(1, wb), 25));
    CHECK(close_digits(g[3] / c3, Real(1, wb), 25));
    CHECK(close_digits(g[4] / c4, Real(1, wb), 25));
    CHECK(close_digits(g[5] / c5, Real(1, wb), 25));
}

TEST_CASE("composition test g(f) = x at full order") {
    auto ctx = make_context(40);
    size_t N = 12;
    auto f = zeta3_generating_series(N, ctx);
    auto g = revert_series(f, N);
    auto comp = compose(g, f, N);
    for (size_t k = 0; k <= N; ++k) {
        Real want(k == 1 ? 1 : 0, g.bits());
        CHECK(close_digits(comp[k], want, 33));
    }
}

TEST_CASE("pi from zeta(3): error decreases at N = 5, 10, 20") {
    auto ctx = make_context(40);
    Real pi = const_pi(ctx);
    Real e5 = abs(pi_from_zeta3(5, ctx) - pi);
    Real e10 = abs(pi_from_zeta3(10, ctx) - pi);
    Real e20 = abs(pi_from_zeta3(20, ctx) - pi);
    CHECK(e10 < e5);
    CHECK(e20 < e10);
    // regression pins (measured: 7.1e-3 / 4.6e-5 / 4.4e-8)
    CHECK(e5 < Real("2e-2", 64));
    CHECK(e10 < Real("1e-4", 64));
    CHECK(e20 < Real("1e-7", 64));
}

TEST_CASE("centered variant matches its printed coefficients") {
    auto ctx = make_context(40);
    auto f = zeta3_centered_series(7, ctx);
    auto g = revert_series(f, 7);
    long wb = g.bits();
    Real pi = const_pi(ctx).rounded(wb);
    Real pi2 = pi * pi;
    CHECK(close_digits(g[1] / (28 / pi2), Real(1, wb), 25));
    CHECK(close_digits(g[2], Real(0, wb), 30));
    Real c3 = -10976 * (pi2 - 8) / (3 * pow(pi, 8));
    CHECK(close_digits(g[3] / c3, Real(1, wb), 25));
    CHECK(close_digits(g[4], Real(0, wb), 30));
    Real c5 = 2151296 * (640 - 112 * pi2 + 5 * pi2 * pi2) / (15 * pow(pi, 14));
    CHECK(close_digits(g[5] / c5, Real(1, wb), 25));

    // and the centered evaluation approaches pi as the order grows
    Real e3 = abs(pi_from_zeta3_centered(3, ctx) - pi);
    Real e9 = abs(pi_from_zeta3_centered(9, ctx) - pi);
    CHECK(e9 < e3);
}

TEST_CASE("alpha coupling entries") {
    CHECK(alpha_coupling(1, 1) == make_rat(1, 2));               // C(4,2)/(4*3)
    CHECK(alpha_coupling(1, 2) == make_rat(15, 48));             // C(6,2)/(16*3)
    CHECK(alpha_coupling(2, 1) == make_rat(15, 60));             // C(6,4)/(4*15)
    auto sys = build_system(4, TailModel::ones);
    for (long i = 0; i < 4; ++i) CHECK(sys.matrix[i][i] == BigRat(1));
    CHECK(sys.matrix[0][1] == -alpha_coupling(1, 1));
    CHECK(sys.matrix[2][1] == BigRat(0));
    CHECK_THROWS_AS(build_system(1, TailModel::ones), DomainError);
}

TEST_CASE("recurrence row identity: alpha(3) = sum A(1,j) alpha(3+2j)") {
    auto ctx = make_context(35);
    long wb = ctx.bits();
    Real acc(0, wb);
    for (long j = 1; j <= 60; ++j)
        acc += Real(alpha_coupling(1, j), wb) * alpha_odd(3 + 2 * j, ctx);
    CHECK(close_digits(acc, alpha_odd(3, ctx), 33));
}

TEST_CASE("solve_alpha3 with oracle tail is precision-limited") {
    auto ctx = make_context(30);
    Real target = alpha_odd(3, ctx);
    Real e6 = abs(solve_alpha3(6, TailModel::oracle, ctx) - target);
    CHECK(e6 < Real("1e-10", 64));
    // error scales with digits, not with n
    auto ctx2 = make_context(45);
    Real t2 = alpha_odd(3, ctx2);
    CHECK(abs(solve_alpha3(4, TailModel::oracle, ctx2) - t2) < Real("1e-25", 64));
    CHECK(abs(solve_alpha3(8, TailModel::oracle, ctx2) - t2) < Real("1e-25", 64));
}

TEST_CASE("ones tail improves with n; zeros is worse than ones") {
    auto ctx = make_context(30);
    Real target = alpha_odd(3, ctx);
    Real e4 = abs(solve_alpha3(4, TailModel::ones, ctx) - target);
    Real e6 = abs(solve_alpha3(6, TailModel::ones, ctx) - target);
    Real e8 = abs(solve_alpha3(8, TailModel::ones, ctx) - target);
    CHECK(e6 < e4);
    CHECK(e8 < e6);
    // measured: 1.7e-6 / 1.6e-8 / 1.5e-10
    CHECK(e4 < Real("1e-5", 64));
    CHECK(e6 < Real("1e-7", 64));
    CHECK(e8 < Real("1e-9", 64));
    Real z4 = abs(solve_alpha3(4, TailModel::zeros, ctx) - target);
    CHECK(e4 < z4);
}

TEST_CASE("u_row equals the exact first row of the inverse, n <= 7") {
    CHECK(u_row(1) == std::vector<BigRat>{BigRat(1)});
    auto u2 = u_row(2);
    CHECK(u2[1] == alpha_coupling(1, 1));
    for (long n = 2; n <= 7; ++n) {
        auto u = u_row(n);
        auto inv = inverse_first_row_by_elimination(n);
        CHECK(u == inv);
    }
}

TEST_CASE("system JSON export") {
    auto sys = build_system(2, TailModel::oracle);
    CHECK(sys.json() ==
          "{\"n\": 2, \"tail_model\": \"oracle\", \"matrix\": [[\"1\", \"-1/2\"], [\"0\", \"1\"]]}");
}
