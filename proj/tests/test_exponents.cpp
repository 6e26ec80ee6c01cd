#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fracset/exponents.hpp"
#include "fracset/generators.hpp"

using namespace fracset;

TEST_CASE("exponent_step on the worked examples", "[exponents]") {
    CHECK(exponent_step(2.0, 4) == Catch::Approx(5.5 / 3.0).epsilon(1e-15));
    CHECK(exponent_step(2.0, 1) == Catch::Approx(10.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(exponent_step(1.0, 4), std::domain_error);
    CHECK_THROWS_AS(exponent_step(0.5, 4), std::domain_error);
}

TEST_CASE("exponent_step maps (1,inf) into (1,inf)", "[exponents]") {
    SeededRng rng(31);
    for (int i = 0; i < 500; ++i) {
        double delta = 1.0 + 99.0 * rng.uniform() + 1e-9;
        unsigned q = static_cast<unsigned>(rng.uniform_int(1, 20));
        CHECK(exponent_step(delta, q) > 1.0);
    }
}

TEST_CASE("exponent_limit closed form", "[exponents]") {
    CHECK(exponent_limit(4) == Catch::Approx(1.8279344228724748).epsilon(1e-12));
    CHECK(exponent_limit(1) == Catch::Approx(1.75 + 0.5 * std::sqrt(8.25)).epsilon(1e-15));
    CHECK(exponent_limit(100) == Catch::Approx(1.0075 + 0.5 * std::sqrt(0.060225)).epsilon(1e-15));
    CHECK(exponent_limit(1'000'000) < 1.002);

    double prev = exponent_limit(1);
    for (unsigned q = 2; q <= 2000; q += 7) {
        double cur = exponent_limit(q);
        CHECK(cur < prev);
        CHECK(cur > 1.0);
        prev = cur;
    }
}

TEST_CASE("exponent_limit is the fixed point of the step", "[exponents]") {
    for (unsigned q : {1u, 2u, 3u, 4u, 10u, 100u, 10000u}) {
        double limit = exponent_limit(q);
        CHECK(std::fabs(exponent_step(limit, q) - limit) < 1e-12);
    }
}

TEST_CASE("iterate_exponents decreases to the closed-form limit", "[exponents]") {
    ExponentTrace trace = iterate_exponents(4, 1e-12);
    CHECK(trace.deltas.front() == 2.0);
    CHECK(trace.deltas[1] == Catch::Approx(5.5 / 3.0).epsilon(1e-15));
    for (std::size_t i = 1; i < trace.deltas.size(); ++i) {
        CHECK(trace.deltas[i] < trace.deltas[i - 1]);
        CHECK(trace.deltas[i] > 1.0);
    }
    CHECK(std::fabs(trace.deltas.back() - trace.limit) <= 1e-10);

    // q small enough that the contraction keeps the stop within 10*tol
    for (unsigned q : {4u, 10u, 100u}) {
        ExponentTrace t = iterate_exponents(q, 1e-12);
        CHECK(std::fabs(t.deltas.back() - exponent_limit(q)) <= 10 * 1e-12);
    }

    ExponentTrace coarse = iterate_exponents(4, 1e-3);
    CHECK(coarse.steps_to_converge <= 20);

    CHECK_THROWS_AS(iterate_exponents(3, 1e-12), std::domain_error);
    CHECK_THROWS_AS(iterate_exponents(4, 0.0), std::invalid_argument);
}

TEST_CASE("threshold_T picks the smallest admissible integer", "[exponents]") {
    CHECK(threshold_T(1.0, 1.0) == 2);
    CHECK(threshold_T(0.5, 0.5) == 8);
    CHECK(threshold_T(0.3, 0.7) == 10);
    SeededRng rng(32);
    for (int i = 0; i < 300; ++i) {
        double alpha = rng.uniform() * 0.999 + 0.001;
        double beta = rng.uniform() * 0.999 + 0.001;
        std::uint64_t t = threshold_T(alpha, beta);
        double ab = alpha * beta;
        CHECK(t >= 2);
        CHECK(static_cast<double>(t) * ab >= 2.0 - 1e-9);
        CHECK(static_cast<double>(t) * ab <= 4.0 + 1e-9);
        CHECK(ab - 1.0 / static_cast<double>(t) > 0.0);
    }
}

TEST_CASE("prop21_lower_bound arithmetic", "[exponents]") {
    CHECK(prop21_lower_bound(1, 1, 10, 10) == Catch::Approx(12.5));
    CHECK(prop21_lower_bound(0.5, 0.5, 100, 100) == Catch::Approx(78.125));
    CHECK(prop21_lower_bound(0.3, 0.8, 200, 50) ==
          Catch::Approx(2.0 * prop21_lower_bound(0.3, 0.8, 100, 50)));
}

namespace {

// log residual of the defining equation at C'
double defining_log_residual(double c_prime, double c, double delta, unsigned q, double c_q) {
    double lhs = -std::log(8.0 * c_prime);
    double rhs = std::log(c_prime / c) / (2.0 * (delta - 1.0)) + delta / (delta - 1.0) * std::log(8.0) +
                 delta / (static_cast<double>(q) * (delta - 1.0)) * std::log(4.0 * c_q);
    return lhs - rhs;
}

} // namespace

TEST_CASE("solve_associated_constant satisfies its defining equation", "[exponents]") {
    SeededRng rng(33);
    for (int i = 0; i < 100; ++i) {
        double c = 1e-4 + rng.uniform() * (0.125 - 1e-4);
        double delta = 1.0 + 1e-3 + rng.uniform();
        unsigned q = static_cast<unsigned>(rng.uniform_int(4, 12));
        double c_q = 1.0 + 99.0 * rng.uniform();
        ConstantSolution sol = solve_associated_constant(c, delta, q, c_q);
        CHECK(sol.c_prime > 0);
        CHECK(sol.c_prime <= 0.25);
        CHECK(std::fabs(defining_log_residual(sol.c_prime, sol.c_used, delta, q, c_q)) < 1e-10);
    }
}

TEST_CASE("solved constant against an independent grid scan", "[exponents]") {
    const double c = 0.125, delta = 2.0, c_q = 24.0;
    const unsigned q = 4;
    ConstantSolution sol = solve_associated_constant(c, delta, q, c_q);
    CHECK(sol.c_used == c);  // no halving needed here

    // scan log C' for the sign change of the defining equation
    double lo = std::log(1e-30), hi = std::log(0.25);
    double bracket_lo = lo, bracket_hi = hi;
    const int steps = 2'000'000;
    double prev_t = lo;
    double prev_sign = defining_log_residual(std::exp(lo), c, delta, q, c_q);
    for (int i = 1; i <= steps; ++i) {
        double t = lo + (hi - lo) * i / steps;
        double s = defining_log_residual(std::exp(t), c, delta, q, c_q);
        if (prev_sign > 0 && s <= 0) {
            bracket_lo = prev_t;
            bracket_hi = t;
            break;
        }
        prev_t = t;
        prev_sign = s;
    }
    CHECK(sol.c_prime >= std::exp(bracket_lo) * (1 - 1e-9));
    CHECK(sol.c_prime <= std::exp(bracket_hi) * (1 + 1e-9));
}

TEST_CASE("returned constant grows with C before clamping", "[exponents]") {
    double small = solve_associated_constant(0.01, 2.0, 4, 24.0).c_prime;
    double large = solve_associated_constant(0.05, 2.0, 4, 24.0).c_prime;
    CHECK(large > small);
}

TEST_CASE("halving engages when the root exceeds 1/4", "[exponents]") {
    ConstantSolution sol = solve_associated_constant(10.0, 2.0, 1, 0.001);
    CHECK(sol.c_prime <= 0.25);
    CHECK(sol.c_used < 10.0);
    CHECK(std::fabs(defining_log_residual(sol.c_prime, sol.c_used, 2.0, 1, 0.001)) < 1e-10);
}

TEST_CASE("constant identity balances to alpha beta / 4", "[exponents]") {
    CHECK(check_constant_identity(0.125, 2.0, 4, 24.0, 1.0, 1.0) == Catch::Approx(1.0).epsilon(1e-9));
    SeededRng rng(34);
    for (int i = 0; i < 100; ++i) {
        double c = 1e-4 + rng.uniform() * (0.125 - 1e-4);
        double delta = 1.0 + 1e-3 + rng.uniform();
        unsigned q = static_cast<unsigned>(rng.uniform_int(4, 12));
        double c_q = 1.0 + 99.0 * rng.uniform();
        double alpha = 0.01 + 0.99 * rng.uniform();
        double beta = 0.01 + 0.99 * rng.uniform();
        double ratio = check_constant_identity(c, delta, q, c_q, alpha, beta);
        CHECK(std::fabs(ratio - 1.0) <= 1e-9);
    }
}

TEST_CASE("constant ledger wiring", "[exponents]") {
    ConstantLedger ledger = make_constant_ledger(0.125, 2.0, 4, 24.0, 0.5, 0.5);
    CHECK(ledger.C_prime <= 0.25);
    CHECK(ledger.delta_prime == Catch::Approx(exponent_step(2.0, 4)));
    CHECK(ledger.L == 1 + static_cast<std::uint64_t>(ledger.K));
    CHECK(ledger.T == threshold_T(0.5, 0.5));
    CHECK(ledger.D == ledger.T);
    double ab = 0.25;
    CHECK(static_cast<double>(ledger.T) >= 2.0 / ab - 1e-9);
    CHECK(static_cast<double>(ledger.T) <= 4.0 / ab + 1e-9);
    CHECK(ledger.K == Catch::Approx(std::pow(ab, 1.0 - ledger.delta_prime) / (8.0 * ledger.C_prime)));
}
