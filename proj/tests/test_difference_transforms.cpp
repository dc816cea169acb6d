#include "test_util.hpp"

#include "zetaforge/difference_transforms.hpp"

using namespace zetaforge;
using zftest::close_digits;

namespace {

RealFn sin_fn() {
    return [](const Real& x, const PrecisionContext&) { return sin(x); };
}
RealFn exp_fn() {
    return [](const Real& x, const PrecisionContext&) { return exp(x); };
}
RealFn log_fn() {
    return [](const Real& x, const PrecisionContext&) { return log(x); };
}

} // namespace

TEST_CASE("difference of polynomials, exact rational path") {
    // Delta^2 x^2 = 2 h^2
    auto d = nth_difference_poly({BigRat(0), BigRat(0), BigRat(1)},
                                 DifferenceSpec(DiffDirection::forward, 2, BigRat(1)));
    CHECK(d == std::vector<BigRat>{BigRat(2), BigRat(0), BigRat(0)});
    auto dh = nth_difference_poly({BigRat(0), BigRat(0), BigRat(1)},
                                  DifferenceSpec(DiffDirection::forward, 2, make_rat(1, 3)));
    CHECK(dh[0] == make_rat(2, 9));

    // degree < n annihilated exactly, n <= 12, both directions
    for (long n = 1; n <= 12; ++n) {
        std::vector<BigRat> p;
        for (long k = 0; k < n; ++k) p.push_back(make_rat(3 * k + 1, k + 2));
        for (auto dir : {DiffDirection::forward, DiffDirection::backward}) {
            auto r = nth_difference_poly(p, DifferenceSpec(dir, n, make_rat(2, 5)));
            for (auto& c : r) CHECK(c == 0);
        }
    }
}

TEST_CASE("numeric difference of x^2") {
    auto ctx = make_context(30);
    RealFn sq = [](const Real& x, const PrecisionContext&) { return x * x; };
    Real d = nth_difference(sq, Real(0, ctx.bits()),
                            DifferenceSpec(DiffDirection::forward, 2, BigRat(1)), ctx);
    CHECK(close_digits(d, Real(2, ctx.bits()), 28));
}

TEST_CASE("closed form for Delta^n sin at h = 1") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    for (long n : {5L, 20L, 50L}) {
        for (const char* xs : {"0", "0.7"}) {
            Real x(xs, wb);
            Real lhs = nth_difference(sin_fn(), x, DifferenceSpec(DiffDirection::forward, n, BigRat(1)), ctx);
            Real rhs = delta_sin_closed(n, x, ctx);
            CHECK(close_digits(lhs, rhs, 25));
        }
    }
}

TEST_CASE("closed form for nabla^n exp") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    for (long n : {5L, 15L, 20L, 50L}) {
        Real x(1, wb);
        Real lhs = nth_difference(exp_fn(), x, DifferenceSpec(DiffDirection::backward, n, BigRat(1)), ctx);
        CHECK(close_digits(lhs, nabla_exp_closed(n, x, ctx), 25));
    }
}

TEST_CASE("Delta^n ln decays through the checkpoints") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    Real prev(1, wb);
    for (long n : {10L, 20L, 40L}) {
        Real d = abs(nth_difference(log_fn(), Real(5, wb),
                                    DifferenceSpec(DiffDirection::forward, n, BigRat(1)), ctx));
        CHECK(d < prev);
        prev = d;
    }
    CHECK(prev < Real("1e-6", 64)); // measured 7.3e-8 at n=40
}

TEST_CASE("binomial acceleration basics") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    RealFn constant = [](const Real&, const PrecisionContext& c) { return Real(42, c.bits()); };
    for (long n : {1L, 7L, 16L})
        CHECK(close_digits(binomial_accel(constant, Real(0, wb), BigRat(1), n, ctx),
                           Real(42, wb), 28));

    // accel(f) = f(k) + (-1)^(n+1) Delta_h^n f(k), checked numerically
    long n = 9;
    Real k("0.5", wb);
    Real lhs = binomial_accel(sin_fn(), k, make_rat(1, 2), n, ctx);
    Real delta = nth_difference(sin_fn(), k, DifferenceSpec(DiffDirection::forward, n, make_rat(1, 2)), ctx);
    Real rhs = sin(k) + ((n + 1) % 2 == 0 ? delta : -delta);
    CHECK(close_digits(lhs, rhs, 26));
}

TEST_CASE("zeta and eta binomial acceleration (power-law rate pinned)") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    Real z3 = zeta_ref(3, ctx);
    // plain shift decays ~ n^-2 for h=1: measured 5.8e-4 at n=40, 3.8e-4 at n=50
    CHECK(abs(binomial_accel(zeta_fn(), Real(3, wb), BigRat(1), 40, ctx) - z3) < Real("2e-3", 64));
    CHECK(abs(zeta_binomial_accel(Real(3, wb), BigRat(1), 50, ctx) - z3) < Real("1e-3", 64));
    // larger/smaller h both converge: measured 9.8e-3 (h=2), 1.6e-6 (h=1/2) at n=50
    Real e_h2_small = abs(zeta_binomial_accel(Real(3, wb), BigRat(2), 10, ctx) - z3);
    Real e_h2_large = abs(zeta_binomial_accel(Real(3, wb), BigRat(2), 50, ctx) - z3);
    CHECK(e_h2_large < e_h2_small);
    CHECK(e_h2_large < Real("5e-2", 64));
    CHECK(abs(zeta_binomial_accel(Real(3, wb), make_rat(1, 2), 50, ctx) - z3) < Real("1e-5", 64));
    // closed-form target
    Real pi = const_pi(ctx);
    // k = 2 decays only ~ 1/n (the Dirichlet tail dominates): measured 3.2e-2
    CHECK(abs(zeta_binomial_accel(Real(2, wb), BigRat(1), 30, ctx) - pi * pi / 6) < Real("5e-2", 64));
    // eta flavor, k > 0
    CHECK(abs(eta_binomial_accel(Real(2, wb), BigRat(1), 40, ctx) - eta_ref(2, ctx)) < Real("2e-3", 64));
    CHECK_THROWS_AS(zeta_binomial_accel(Real(1, wb), BigRat(1), 5, ctx), DomainError);
}

TEST_CASE("log-shifted acceleration converges dramatically faster") {
    auto ctx = make_context(60);
    long wb = ctx.bits();
    Real z3 = zeta_ref(3, ctx);
    Real e10 = abs(zeta_log_shift_accel(Real(3, wb), make_rat(1, 16), 10, ctx) - z3);
    Real e50 = abs(zeta_log_shift_accel(Real(3, wb), make_rat(1, 16), 50, ctx) - z3);
    CHECK(e10 < Real("1e-15", 64)); // measured 1.7e-19
    CHECK(e50 < Real("1e-45", 64)); // measured 4e-61 at this precision
    CHECK(e50 <= e10);
    Real pi = const_pi(ctx);
    CHECK(abs(zeta_log_shift_accel(Real(2, wb), make_rat(1, 16), 50, ctx) - pi * pi / 6) <
          Real("1e-30", 64)); // measured 2.7e-36
}

TEST_CASE("product-form acceleration") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    Real z3 = zeta_ref(3, ctx);
    CHECK(abs(zeta_product_accel(Real(3, wb), BigRat(1), 40, ctx) - z3) < Real("1e-3", 64));
    Real pi = const_pi(ctx);
    CHECK(abs(zeta_product_accel(Real(4, wb), BigRat(1), 40, ctx) - pow(pi, 4) / 90) <
          Real("1e-3", 64));
    // n = 1 degenerates to zeta(k+h)
    CHECK(close_digits(zeta_product_accel(Real(3, wb), BigRat(1), 1, ctx), zeta_ref(4, ctx), 27));
}

TEST_CASE("Stirling difference identities hold exactly") {
    auto r32 = stirling_difference_identity(3, 2);
    CHECK(r32.holds);
    CHECK(r32.rhs == std::vector<BigRat>{BigRat(0), BigRat(0), BigRat(1)}); // x^2 = x^2

    auto r33 = stirling_difference_identity(3, 3);
    CHECK(r33.holds);
    CHECK(r33.rhs[0] == BigRat(6)); // (-1)^4 3!

    auto r24 = stirling_difference_identity(2, 4);
    CHECK(r24.holds);
    // x^4 - 2(7 + 12x + 6x^2) via S(4,2)=7, S(3,2)=3, S(2,2)=1
    CHECK(r24.rhs ==
          std::vector<BigRat>{BigRat(-14), BigRat(-24), BigRat(-12), BigRat(0), BigRat(1)});

    for (long n = 1; n <= 8; ++n)
        for (long k = 0; k <= 12; ++k) CHECK(stirling_difference_identity(n, k).holds);
}

TEST_CASE("mod-1 summation") {
    auto ctx = make_context(30);
    TermGenerator ints = [](long j, const PrecisionContext& c) {
        return Real(j % 2 == 0 ? -7 : 7, c.bits());
    };
    CHECK(mod1_sum(ints, 12, ctx).is_zero());
    TermGenerator halves = [](long j, const PrecisionContext& c) {
        Real v("0.5", c.bits());
        return j % 2 == 0 ? -v : v;
    };
    CHECK(mod1_sum(halves, 8, ctx).is_zero());
    Real r = mod1_sum(halves, 7, ctx);
    CHECK(close_digits(r, Real("0.5", 64), 28));
    // representative stays in [0,1) under negative drift
    TermGenerator neg = [](long, const PrecisionContext& c) { return Real("-0.75", c.bits()); };
    Real v = mod1_sum(neg, 3, ctx);
    CHECK(v >= 0);
    CHECK(v < 1);
    CHECK(close_digits(v, Real("0.75", 64), 28)); // -2.25 mod 1
}

TEST_CASE("step-sequence accelerations reach zeta(3)") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    Real z3 = zeta_ref(3, ctx);
    auto f = zeta_fn();
    Real x3(3, wb);
    // measured at n=60: 3.7e-2 / 7.5e-4 / 5.4e-4 / 6.3e-4
    CHECK(abs(step_sequence_accel(f, x3, BigRat(1), StepSequence::inverse_power(2), 60, ctx) - z3) <
          Real("5e-2", 64));
    CHECK(abs(step_sequence_accel(f, x3, BigRat(1), StepSequence::exp_decay(), 60, ctx) - z3) <
          Real("5e-3", 64));
    CHECK(abs(step_sequence_accel(f, x3, BigRat(1), StepSequence::logistic(), 60, ctx) - z3) <
          Real("5e-3", 64));
    CHECK(abs(step_sequence_accel(f, x3, BigRat(1), StepSequence::geometric_half(), 60, ctx) - z3) <
          Real("5e-3", 64));
    // improvement from n=20 to n=60 for the geometric variant
    Real e20 = abs(step_sequence_accel(f, x3, BigRat(1), StepSequence::geometric_half(), 20, ctx) - z3);
    Real e60 = abs(step_sequence_accel(f, x3, BigRat(1), StepSequence::geometric_half(), 60, ctx) - z3);
    CHECK(e60 < e20);
    CHECK_THROWS_AS(StepSequence::inverse_power(1), DomainError);
}

TEST_CASE("power identities") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    // x > 1, descending exponents: error = x (1-1/x)^n
    Real x3(3, wb);
    Real e30 = abs(power_identity_check(x3, 30, PowerIdentityForm::descending, ctx) - x3);
    Real e60 = abs(power_identity_check(x3, 60, PowerIdentityForm::descending, ctx) - x3);
    CHECK(e30 < Real("1e-4", 64)); // measured 1.56e-5
    CHECK(e60 < Real("1e-9", 64)); // measured 8.1e-11
    CHECK(e60 < e30);
    // 0 < x < 1, ascending
    Real third = Real(1, wb) / 3;
    CHECK(abs(power_identity_check(third, 30, PowerIdentityForm::ascending, ctx) - third) <
          Real("1e-5", 64));
    // x = 2 ascending: 0 for even n, 4 for odd n
    Real two(2, wb);
    CHECK(close_digits(power_identity_check(two, 12, PowerIdentityForm::ascending, ctx),
                       Real(0, wb), 25));
    CHECK(close_digits(power_identity_check(two, 13, PowerIdentityForm::ascending, ctx),
                       Real(4, wb), 25));
}

TEST_CASE("numeric experiments stay close to their targets") {
    auto ctx = make_context(30);
    long wb = ctx.bits();
    CHECK(abs(zeta_simple_pole_experiment(3, 20, ctx) - zeta_ref(3, ctx)) < Real("1e-18", 64));
    Real e2 = eta_ref(2, ctx);
    CHECK(abs(eta_weight_experiment(2, Real(2, wb), Real(4, wb), Real(1, wb), 40, ctx) - e2) <
          Real("1e-3", 64));
}
