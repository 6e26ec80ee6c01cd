#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fracset/setcore.hpp"

namespace fracset {

// Seeded generator with a fixed algorithm (splitmix64), so sequences are
// reproducible across platforms and standard-library versions.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform integer in [lo, hi]
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        std::uint64_t span = hi - lo + 1;
        if (span == 0) return next();  // full 64-bit range
        return lo + next() % span;
    }

private:
    std::uint64_t state_;
};

// Bernoulli(alpha) subset of [1, x].
inline IntegerSet bernoulli_set(double alpha, std::uint64_t x, std::uint64_t seed) {
    if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("bernoulli_set: alpha must lie in [0, 1]");
    if (x == 0) throw std::invalid_argument("bernoulli_set: x must be >= 1");
    SeededRng rng(seed);
    std::vector<std::uint64_t> elems;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (rng.uniform() < alpha) elems.push_back(n);
    return IntegerSet(std::move(elems), x);
}

// Bernoulli(alpha) subset of the window (x/2, x], ambient bound x.
inline IntegerSet bernoulli_window_set(double alpha, std::uint64_t x, std::uint64_t seed) {
    if (!(alpha >= 0 && alpha <= 1))
        throw std::invalid_argument("bernoulli_window_set: alpha must lie in [0, 1]");
    if (x == 0) throw std::invalid_argument("bernoulli_window_set: x must be >= 1");
    SeededRng rng(seed);
    std::vector<std::uint64_t> elems;
    for (std::uint64_t n = x / 2 + 1; n <= x; ++n)
        if (rng.uniform() < alpha) elems.push_back(n);
    return IntegerSet(std::move(elems), x);
}

// Adversarial family: the multiples of a few random small divisors. Such sets
// concentrate mass on gcd classes far more than Bernoulli sets do.
inline IntegerSet multiples_union_set(std::uint64_t x, unsigned divisor_count, std::uint64_t max_divisor,
                                      std::uint64_t seed) {
    if (divisor_count == 0) throw std::invalid_argument("multiples_union_set: need at least one divisor");
    if (max_divisor < 2) throw std::invalid_argument("multiples_union_set: max_divisor must be >= 2");
    SeededRng rng(seed);
    std::vector<std::uint64_t> divisors;
    for (unsigned i = 0; i < divisor_count; ++i) divisors.push_back(rng.uniform_int(2, max_divisor));
    return multiples_of_any(divisors, x);
}

} // namespace fracset
