#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fracset/numeric.hpp"
#include "fracset/setcore.hpp"

namespace fracset {

// Parameters of one restricted-divisor experiment: smoothness bound D, moment
// order q, and the empirical moment constant c_q (max of sum/(D*X) over a
// measurement grid). analytic_cq_fallback gives the (2^q)! bound that holds
// with absolute constants.
struct DivisorProfile {
    std::uint64_t smooth_bound = 1;    // D
    unsigned moment_order = 0;         // q
    double c_q = 1.0;
};

inline BigInt analytic_cq_fallback(unsigned q) {
    if (q > 24) throw std::invalid_argument("analytic_cq_fallback: 2^q overflows the factorial argument");
    return factorial(1u << q);
}

// k(n): the largest D-smooth divisor of n.
inline std::uint64_t smooth_part(std::uint64_t n, std::uint64_t d) {
    if (n == 0 || d == 0) throw std::invalid_argument("smooth_part: arguments must be >= 1");
    std::uint64_t smooth = 1;
    std::uint64_t rem = n;
    for (std::uint64_t p = 2; p <= d && p * p <= rem; p = (p == 2 ? 3 : p + 2)) {
        while (rem % p == 0) {
            rem /= p;
            smooth *= p;
        }
    }
    // rem is now 1 or has its least prime factor > min(d, sqrt(rem)); if rem
    // itself is a prime <= d it still belongs to the smooth part.
    if (rem > 1 && rem <= d) {
        smooth *= rem;
        rem = 1;
    }
    return smooth;
}

// tau_D(n): the number of divisors of n all of whose prime factors are <= D.
inline std::uint64_t tau_restricted(std::uint64_t n, std::uint64_t d) {
    if (n == 0 || d == 0) throw std::invalid_argument("tau_restricted: arguments must be >= 1");
    std::uint64_t tau = 1;
    std::uint64_t rem = n;
    for (std::uint64_t p = 2; p <= d && p * p <= rem; p = (p == 2 ? 3 : p + 2)) {
        unsigned e = 0;
        while (rem % p == 0) {
            rem /= p;
            ++e;
        }
        tau *= e + 1;
    }
    if (rem > 1 && rem <= d) tau *= 2;
    return tau;
}

namespace detail {

inline BigInt bigint_from_u128(unsigned __int128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(v);
}

// All D-smooth integers <= x, by depth-first products over the primes <= D.
inline std::vector<std::uint64_t> smooth_numbers_up_to(std::uint64_t x, std::uint64_t d) {
    std::vector<std::uint64_t> primes = primes_up_to(std::min(x, d));
    std::vector<std::uint64_t> out{1};
    std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 1}};
    while (!stack.empty()) {
        auto [idx, val] = stack.back();
        stack.pop_back();
        for (std::size_t i = idx; i < primes.size(); ++i) {
            if (val > x / primes[i]) break;
            std::uint64_t next = val * primes[i];
            out.push_back(next);
            stack.emplace_back(i, next);
        }
    }
    return out;
}

} // namespace detail

// Exact sum of tau_D(n)^q over n in [1, x]. tau_D is accumulated by a
// divisor-style sieve: each D-smooth s <= x contributes 1 to all multiples.
inline BigInt tau_moment_sum(std::uint64_t x, unsigned q, std::uint64_t d) {
    if (x == 0 || d == 0) throw std::invalid_argument("tau_moment_sum: x and d must be >= 1");
    if (x > 100'000'000) throw std::length_error("tau_moment_sum: x exceeds the sieve budget");

    std::vector<std::uint32_t> tau(static_cast<std::size_t>(x) + 1, 0);
    for (std::uint64_t s : detail::smooth_numbers_up_to(x, d))
        for (std::uint64_t n = s; n <= x; n += s) ++tau[static_cast<std::size_t>(n)];

    unsigned __int128 acc = 0;
    BigInt total = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        std::uint64_t term;
        if (pow_checked_u64(tau[static_cast<std::size_t>(n)], q, term)) {
            acc += term;
            if (acc >> 120) {  // flush long before __int128 can wrap
                total += detail::bigint_from_u128(acc);
                acc = 0;
            }
        } else {
            total += bigint_pow(BigInt(tau[static_cast<std::size_t>(n)]), q);
        }
    }
    total += detail::bigint_from_u128(acc);
    return total;
}

// S(q) = sum over D-smooth m of tau(m)^q / m, as the Euler product over
// primes p <= D of sum_j (j+1)^q p^-j. Each inner series stops at the first
// term below tol * partial / pi(D); the per-term ratio is decreasing, so
// terms are unimodal and the stop cannot fire while they still grow.
inline double smooth_tau_moment(unsigned q, std::uint64_t d, double tol) {
    if (d == 0) throw std::invalid_argument("smooth_tau_moment: d must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("smooth_tau_moment: tol must be > 0");
    std::vector<std::uint64_t> primes = primes_up_to(d);
    if (primes.empty()) return 1.0;
    const long double prime_count = static_cast<long double>(primes.size());
    long double product = 1.0L;
    for (std::uint64_t p : primes) {
        const long double inv_p = 1.0L / static_cast<long double>(p);
        long double partial = 0.0L;
        long double power = 1.0L;  // p^-j
        for (unsigned j = 0;; ++j) {
            long double term = std::pow(static_cast<long double>(j + 1), static_cast<long double>(q)) * power;
            partial += term;
            power *= inv_p;
            if (term < static_cast<long double>(tol) * partial / prime_count) break;
            if (j > 100000) throw std::runtime_error("smooth_tau_moment: inner series failed to truncate");
        }
        product *= partial;
    }
    return static_cast<double>(product);
}

// prod over p <= D of (1 - 1/p)^-1, accumulated in extended precision.
inline double mertens_product(std::uint64_t d) {
    if (d < 2) throw std::invalid_argument("mertens_product: d must be >= 2");
    long double product = 1.0L;
    for (std::uint64_t p : primes_up_to(d))
        product *= static_cast<long double>(p) / static_cast<long double>(p - 1);
    return static_cast<double>(product);
}

// Empirical c_q: max of tau_moment_sum(X,q,D) / (D*X) over a grid.
inline double measure_cq(unsigned q, const std::vector<std::uint64_t>& ds, const std::vector<std::uint64_t>& xs) {
    if (ds.empty() || xs.empty()) throw std::invalid_argument("measure_cq: empty grid");
    double worst = 0.0;
    for (std::uint64_t d : ds) {
        for (std::uint64_t x : xs) {
            BigInt sum = tau_moment_sum(x, q, d);
            double ratio = sum.convert_to<double>() / (static_cast<double>(d) * static_cast<double>(x));
            worst = std::max(worst, ratio);
        }
    }
    return worst;
}

inline DivisorProfile make_profile(unsigned q, std::uint64_t d, const std::vector<std::uint64_t>& grid_ds,
                                   const std::vector<std::uint64_t>& grid_xs) {
    return DivisorProfile{d, q, measure_cq(q, grid_ds, grid_xs)};
}

} // namespace fracset
