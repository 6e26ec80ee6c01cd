#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fracset/fracstat.hpp"
#include "fracset/numeric.hpp"
#include "fracset/setcore.hpp"

namespace fracset {

// A set of 2m distinct primes, optionally drawn from the interval [T, T + T/m].
struct PrimeFamily {
    std::vector<std::uint64_t> primes;
    unsigned m = 0;
    std::optional<std::uint64_t> window_t;

    PrimeFamily(std::vector<std::uint64_t> ps, unsigned m_, std::optional<std::uint64_t> t = std::nullopt)
        : primes(std::move(ps)), m(m_), window_t(t) {
        if (m == 0) throw std::invalid_argument("PrimeFamily: m must be >= 1");
        if (primes.size() != 2 * static_cast<std::size_t>(m))
            throw std::invalid_argument("PrimeFamily: need exactly 2m primes");
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (!is_prime_u64(primes[i])) throw std::invalid_argument("PrimeFamily: non-prime member");
            if (i > 0 && primes[i] == primes[i - 1]) throw std::invalid_argument("PrimeFamily: duplicate prime");
        }
        if (window_t) {
            std::uint64_t t_lo = *window_t;
            for (std::uint64_t p : primes) {
                // p in [T, T + T/m] checked in integers: m*(p - T) <= T
                if (p < t_lo || (p - t_lo) * m > t_lo)
                    throw std::invalid_argument("PrimeFamily: prime outside window [T, T + T/m]");
            }
        }
    }
};

// S(P): products of the m-element subsets of P, strictly increasing.
// Size is exactly binom(2m, m); products are distinct by unique factorization.
inline std::vector<BigInt> subset_products(const PrimeFamily& family) {
    const unsigned n = 2 * family.m;
    const unsigned m = family.m;
    if (m > 12) throw std::length_error("subset_products: binom(2m, m) exceeds the enumeration budget");
    std::vector<BigInt> out;
    std::vector<unsigned> idx(m);
    for (unsigned i = 0; i < m; ++i) idx[i] = i;
    for (;;) {
        BigInt prod = 1;
        for (unsigned i : idx) prod *= family.primes[i];
        out.push_back(prod);
        // next m-combination in lexicographic order
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && idx[static_cast<unsigned>(i)] == n - m + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++idx[static_cast<unsigned>(i)];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// |S(P)/S(P)| depends only on m: each ratio d(I)/d(J) reduces to d(U)/d(V)
// with U, V disjoint and |U| = |V| = j <= m, every such pair occurs, and
// distinct pairs give distinct rationals. Hence the count is
// sum_{j=0..m} binom(2m, j) * binom(2m - j, j).
inline BigInt ratio_set_count_formula(unsigned m) {
    if (m == 0) throw std::invalid_argument("ratio_set_count_formula: m must be >= 1");
    BigInt total = 0;
    for (unsigned j = 0; j <= m; ++j) total += binomial(2 * m, j) * binomial(2 * m - j, j);
    return total;
}

inline BigInt ratio_set_count_exact(const PrimeFamily& family) { return ratio_set_count_formula(family.m); }

// (2m+1)^2 * (3/4)^(2m): the coefficient with |S/S| <= coeff * |S|^2.
inline double lemma31_bound(unsigned m) {
    if (m == 0) throw std::invalid_argument("lemma31_bound: m must be >= 1");
    double c = static_cast<double>(2 * m + 1);
    return c * c * std::pow(0.75, 2.0 * static_cast<double>(m));
}

// A(P) ∩ [1, X]: integers divisible by at least one subset product.
inline IntegerSet build_t12_set(const PrimeFamily& family, std::uint64_t x) {
    std::vector<std::uint64_t> divisors;
    for (const BigInt& p : subset_products(family))
        if (p <= x) divisors.push_back(p.convert_to<std::uint64_t>());
    if (divisors.empty())
        throw std::invalid_argument("build_t12_set: X is smaller than every subset product");
    return multiples_of_any(divisors, x);
}

// Exact asymptotic density of A(P) by inclusion-exclusion over the subsets of
// S(P). Products are squarefree over a common prime set, so the lcm of any
// collection is the product of the primes in the union of their index sets.
inline BigRat density_alpha_p(const PrimeFamily& family) {
    std::vector<BigInt> products = subset_products(family);
    const std::size_t n = products.size();
    if (n > 20)
        throw std::length_error("density_alpha_p: more than 20 subset products; "
                                "use the empirical density route instead");

    const unsigned bits = 2 * family.m;
    // index-set mask of each product, in the same sorted order
    std::vector<std::uint32_t> mask(n);
    {
        std::vector<unsigned> idx(family.m);
        for (unsigned i = 0; i < family.m; ++i) idx[i] = i;
        std::vector<std::pair<BigInt, std::uint32_t>> tagged;
        for (;;) {
            BigInt prod = 1;
            std::uint32_t mk = 0;
            for (unsigned i : idx) {
                prod *= family.primes[i];
                mk |= 1u << i;
            }
            tagged.emplace_back(std::move(prod), mk);
            int i = static_cast<int>(family.m) - 1;
            while (i >= 0 && idx[static_cast<unsigned>(i)] == bits - family.m + static_cast<unsigned>(i)) --i;
            if (i < 0) break;
            ++idx[static_cast<unsigned>(i)];
            for (unsigned j = static_cast<unsigned>(i) + 1; j < family.m; ++j) idx[j] = idx[j - 1] + 1;
        }
        std::sort(tagged.begin(), tagged.end());
        for (std::size_t i = 0; i < n; ++i) mask[i] = tagged[i].second;
    }

    // net signed coefficient of 1/d(union-mask) over all nonempty subsets
    std::vector<std::int64_t> coef(std::size_t{1} << bits, 0);
    std::vector<std::uint32_t> union_of(std::size_t{1} << n);
    union_of[0] = 0;
    for (std::size_t f = 1; f < (std::size_t{1} << n); ++f) {
        std::size_t low = f & (f - 1);
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(f));
        union_of[f] = union_of[low] | mask[bit];
        coef[union_of[f]] += (__builtin_popcountll(f) & 1) ? 1 : -1;
    }

    BigInt all_primes = 1;
    for (std::uint64_t p : family.primes) all_primes *= p;
    BigInt numerator = 0;
    for (std::size_t mk = 1; mk < (std::size_t{1} << bits); ++mk) {
        if (coef[mk] == 0) continue;
        BigInt d = 1;
        for (unsigned i = 0; i < bits; ++i)
            if (mk >> i & 1) d *= family.primes[i];
        numerator += coef[mk] * (all_primes / d);
    }
    return BigRat(numerator, all_primes);
}

// The dilated-primitive-point construction: S is a prescribed-size set of
// primitive points in [1, gamma X] x [1, gamma Y], C the union of its dilates.
struct T13Construction {
    double gamma = 1.0;
    std::uint64_t x = 1;
    std::uint64_t y = 1;
    std::uint64_t dilate_count = 1;  // floor(1/gamma)
    GridPointSet s;
    GridPointSet c;
};

enum class PointSelector { lexicographic, seeded_shuffle };

inline std::uint64_t primitive_point_count(std::uint64_t nx, std::uint64_t ny) {
    std::uint64_t count = 0;
    for (std::uint64_t b = 1; b <= ny; ++b)
        for (std::uint64_t a = 1; a <= nx; ++a)
            if (gcd_u64(a, b) == 1) ++count;
    return count;
}

inline T13Construction build_t13(double gamma, std::uint64_t x, std::uint64_t y,
                                 PointSelector selector = PointSelector::lexicographic,
                                 std::uint64_t seed = 0) {
    if (!(gamma > 0 && gamma <= 1)) throw std::invalid_argument("build_t13: gamma must lie in (0, 1]");
    if (x == 0 || y == 0) throw std::invalid_argument("build_t13: X, Y must be >= 1");
    const auto nx = static_cast<std::uint64_t>(gamma * static_cast<double>(x) + 1e-9);
    const auto ny = static_cast<std::uint64_t>(gamma * static_cast<double>(y) + 1e-9);
    if (nx == 0 || ny == 0) throw std::invalid_argument("build_t13: gamma X or gamma Y below 1");
    const double g2xy = gamma * gamma * static_cast<double>(x) * static_cast<double>(y);
    const auto target = static_cast<std::uint64_t>(std::ceil(g2xy / 4.0 - 1e-9));
    if (static_cast<double>(target) > g2xy / 2.0 + 1e-9)
        throw std::invalid_argument("build_t13: size window [g^2XY/4, g^2XY/2] is empty at these bounds");

    std::vector<GridPointSet::Point> primitive;
    for (std::uint64_t b = 1; b <= ny; ++b)
        for (std::uint64_t a = 1; a <= nx; ++a)
            if (gcd_u64(a, b) == 1) primitive.emplace_back(a, b);
    if (primitive.size() < target)
        throw std::invalid_argument("build_t13: not enough primitive points; X, Y too small for gamma");

    if (selector == PointSelector::seeded_shuffle) {
        // Fisher-Yates with a spelled-out index draw, so the order is fixed by
        // the seed alone.
        std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
        auto next = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            return state;
        };
        for (std::size_t i = primitive.size() - 1; i > 0; --i)
            std::swap(primitive[i], primitive[next() % (i + 1)]);
    }
    // lexicographic selector: points were generated in (b, a) order already

    std::vector<GridPointSet::Point> chosen(primitive.begin(),
                                            primitive.begin() + static_cast<std::ptrdiff_t>(target));
    const auto dilates = static_cast<std::uint64_t>(1.0 / gamma + 1e-9);

    std::vector<GridPointSet::Point> all;
    all.reserve(chosen.size() * dilates);
    for (std::uint64_t d = 1; d <= dilates; ++d)
        for (auto [a, b] : chosen) all.emplace_back(d * a, d * b);

    T13Construction out;
    out.gamma = gamma;
    out.x = x;
    out.y = y;
    out.dilate_count = dilates;
    out.s = GridPointSet(std::move(chosen), nx, ny);
    out.c = GridPointSet(std::move(all), x, y);  // duplicate dilates would throw here
    return out;
}

} // namespace fracset
