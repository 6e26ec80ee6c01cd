#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fracset {

// One admissible-exponent improvement step: delta' = (3*delta*(1+1/q) - 2) / (2*delta - 1).
inline double exponent_step(double delta, unsigned q) {
    if (!(delta > 1.0)) throw std::domain_error("exponent_step: delta must be > 1");
    if (q < 1) throw std::domain_error("exponent_step: q must be >= 1");
    double qd = static_cast<double>(q);
    return (3.0 * delta * (1.0 + 1.0 / qd) - 2.0) / (2.0 * delta - 1.0);
}

// Closed-form limit of the recursion: 1 + 3/(4q) + sqrt(6/q + 9/(4q^2)) / 2.
inline double exponent_limit(unsigned q) {
    if (q < 1) throw std::domain_error("exponent_limit: q must be >= 1");
    double qd = static_cast<double>(q);
    return 1.0 + 3.0 / (4.0 * qd) + 0.5 * std::sqrt(6.0 / qd + 9.0 / (4.0 * qd * qd));
}

// The iterates delta_1 = 2, delta_{n+1} = step(delta_n), with the closed-form
// limit recorded alongside for comparison.
struct ExponentTrace {
    unsigned q = 0;
    std::vector<double> deltas;
    double limit = 0.0;
    unsigned steps_to_converge = 0;
    double tol = 0.0;
};

inline ExponentTrace iterate_exponents(unsigned q, double tol) {
    if (q < 4) throw std::domain_error("iterate_exponents: q must be >= 4 (iteration from 2 decreases only then)");
    if (!(tol > 0)) throw std::invalid_argument("iterate_exponents: tol must be > 0");
    ExponentTrace trace;
    trace.q = q;
    trace.tol = tol;
    trace.deltas.push_back(2.0);
    for (unsigned n = 0; n < 1'000'000; ++n) {
        double cur = trace.deltas.back();
        double next = exponent_step(cur, q);
        trace.deltas.push_back(next);
        if (std::fabs(next - cur) < tol) {
            trace.steps_to_converge = n + 1;
            trace.limit = exponent_limit(q);
            return trace;
        }
    }
    throw std::runtime_error("iterate_exponents: no convergence within 1e6 steps");
}

// Smallest integer in [2/(alpha*beta), 4/(alpha*beta)]; exists since alpha*beta <= 1 < 2.
inline std::uint64_t threshold_T(double alpha, double beta) {
    if (!(alpha > 0 && alpha <= 1) || !(beta > 0 && beta <= 1))
        throw std::invalid_argument("threshold_T: densities must lie in (0, 1]");
    return static_cast<std::uint64_t>(std::ceil(2.0 / (alpha * beta)));
}

// (alpha*beta)^2 * X * Y / 8.
inline double prop21_lower_bound(double alpha, double beta, double x, double y) {
    if (!(alpha > 0 && alpha <= 1) || !(beta > 0 && beta <= 1))
        throw std::invalid_argument("prop21_lower_bound: densities must lie in (0, 1]");
    if (!(x >= 1) || !(y >= 1)) throw std::invalid_argument("prop21_lower_bound: X, Y must be >= 1");
    double ab = alpha * beta;
    return ab * ab * x * y / 8.0;
}

// C' > 0 solving 1/(8C') = (C'/C)^{1/(2(delta-1))} * 8^{delta/(delta-1)} * (4 c_q)^{delta/(q(delta-1))},
// together with the C actually used: when the root lands above 1/4, C is
// halved and the solve repeated until C' <= 1/4.
struct ConstantSolution {
    double c_prime = 0.0;
    double c_used = 0.0;
};

namespace detail {

// Left side decreasing, right side increasing in C', so the sign of
// lhs - rhs brackets the unique root. Bisection runs on log(C').
inline double solve_cprime_once(double c, double delta, unsigned q, double c_q) {
    const double a = 1.0 / (2.0 * (delta - 1.0));
    const double b = delta / (delta - 1.0);
    const double e = delta / (static_cast<double>(q) * (delta - 1.0));
    auto sign_at = [&](double t) {
        // log(lhs) - log(rhs) at C' = exp(t)
        double log_lhs = -std::log(8.0) - t;
        double log_rhs = a * (t - std::log(c)) + b * std::log(8.0) + e * std::log(4.0 * c_q);
        return log_lhs - log_rhs;
    };
    double lo = std::log(1e-30);
    double hi = std::log(0.25);
    if (sign_at(hi) > 0) return 0.5;  // root above 1/4; caller halves C
    if (sign_at(lo) < 0) throw std::runtime_error("solve_associated_constant: root below bracket");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        (sign_at(mid) > 0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

} // namespace detail

inline ConstantSolution solve_associated_constant(double c, double delta, unsigned q, double c_q) {
    if (!(c > 0)) throw std::invalid_argument("solve_associated_constant: C must be > 0");
    if (!(delta > 1.0)) throw std::domain_error("solve_associated_constant: delta must be > 1");
    if (q < 1 || !(c_q > 0)) throw std::invalid_argument("solve_associated_constant: need q >= 1, c_q > 0");
    for (int halvings = 0; halvings < 2000; ++halvings) {
        double root = detail::solve_cprime_once(c, delta, q, c_q);
        if (root <= 0.25) return {root, c};
        c *= 0.5;
    }
    throw std::runtime_error("solve_associated_constant: C' stayed above 1/4 after repeated halving");
}

// Ratio of the balancing expression
//   2 (C'/C)^{1/(2 delta)} (alpha beta)^{delta'/(2 delta) + 1/2 - 3/(2q)} K^{1/delta - 1} (4 c_q)^{1/q}
// to alpha*beta/4, where K = (alpha beta)^{1 - delta'} / (8 C'). Equals 1 when
// the constants are wired correctly.
inline double check_constant_identity(double c, double delta, unsigned q, double c_q, double alpha, double beta) {
    if (!(alpha > 0 && alpha <= 1) || !(beta > 0 && beta <= 1))
        throw std::invalid_argument("check_constant_identity: densities must lie in (0, 1]");
    ConstantSolution sol = solve_associated_constant(c, delta, q, c_q);
    const double c_used = sol.c_used;
    const double c_prime = sol.c_prime;
    const double delta_prime = exponent_step(delta, q);
    const double qd = static_cast<double>(q);
    const double ab = alpha * beta;
    const double k = std::pow(ab, 1.0 - delta_prime) / (8.0 * c_prime);
    double lhs = 2.0 * std::pow(c_prime / c_used, 1.0 / (2.0 * delta)) *
                 std::pow(ab, delta_prime / (2.0 * delta) + 0.5 - 3.0 / (2.0 * qd)) *
                 std::pow(k, 1.0 / delta - 1.0) * std::pow(4.0 * c_q, 1.0 / qd);
    return lhs / (ab / 4.0);
}

// The full constant chain of one bootstrap step, instantiated at (alpha, beta).
struct ConstantLedger {
    double C = 0.0;          // constant actually used (input C possibly halved)
    double C_prime = 0.0;
    double delta = 0.0;
    double delta_prime = 0.0;
    unsigned q = 0;
    double c_q = 0.0;
    double K = 0.0;
    std::uint64_t L = 0;     // 1 + floor(K)
    std::uint64_t T = 0;
    std::uint64_t D = 0;     // reuses threshold_T; any integer in the interval works
};

inline ConstantLedger make_constant_ledger(double c, double delta, unsigned q, double c_q, double alpha,
                                           double beta) {
    ConstantSolution sol = solve_associated_constant(c, delta, q, c_q);
    ConstantLedger ledger;
    ledger.C = sol.c_used;
    ledger.C_prime = sol.c_prime;
    ledger.delta = delta;
    ledger.delta_prime = exponent_step(delta, q);
    ledger.q = q;
    ledger.c_q = c_q;
    ledger.K = std::pow(alpha * beta, 1.0 - ledger.delta_prime) / (8.0 * sol.c_prime);
    if (!(ledger.K < 9e18)) throw std::overflow_error("make_constant_ledger: K does not fit an integer L");
    ledger.L = 1 + static_cast<std::uint64_t>(ledger.K);
    ledger.T = threshold_T(alpha, beta);
    ledger.D = ledger.T;
    return ledger;
}

} // namespace fracset
