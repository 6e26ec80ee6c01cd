#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "fracset/numeric.hpp"
#include "fracset/parallel.hpp"
#include "fracset/setcore.hpp"

namespace fracset {

// A positive rational in lowest terms; the pair (num, den) is the canonical key.
struct ReducedFraction {
    std::uint64_t num = 0;
    std::uint64_t den = 0;

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
    friend auto operator<=>(const ReducedFraction&, const ReducedFraction&) = default;
};

inline ReducedFraction reduce_fraction(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) throw std::invalid_argument("reduce_fraction: arguments must be >= 1");
    std::uint64_t g = gcd_u64(a, b);
    return {a / g, b / g};
}

// Sizes |M(A,B,d)| for every d with a nonzero class; they partition A x B.
struct GcdClassTable {
    std::map<std::uint64_t, std::uint64_t> sizes;
    std::uint64_t total_pairs = 0;
    std::uint64_t sup_d = 0;    // smallest d attaining the maximum; 0 when empty
    std::uint64_t sup_size = 0;
};

namespace detail {

// Pair enumeration is O(|A|*|B|); refuse anything past desk scale.
constexpr std::uint64_t kPairBudget = 1'000'000'000;

inline void check_pair_budget(const IntegerSet& a, const IntegerSet& b) {
    unsigned __int128 pairs = static_cast<unsigned __int128>(a.size()) * b.size();
    if (pairs > kPairBudget)
        throw std::length_error("pair enumeration over budget: |A|*|B| exceeds 1e9");
}

// Canonical keys are packed into one word, so bounds must fit 32 bits.
inline void check_pack_range(std::uint64_t bound, const char* who) {
    if (bound >= (std::uint64_t{1} << 32))
        throw std::length_error(std::string(who) + ": ambient bound must be < 2^32");
}

inline std::uint64_t count_distinct_keys(std::vector<std::uint64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

} // namespace detail

// |A/B|: the number of distinct reduced fractions a/b over (a,b) in A x B.
// Each pair reduces to a packed canonical key; dedup by sort + unique gives a
// deterministic result independent of any internal split.
inline std::uint64_t ratio_count(const IntegerSet& a, const IntegerSet& b) {
    if (a.empty() || b.empty()) return 0;
    detail::check_pair_budget(a, b);
    detail::check_pack_range(a.ambient_bound(), "ratio_count");
    detail::check_pack_range(b.ambient_bound(), "ratio_count");

    const auto& as = a.elements();
    const auto& bs = b.elements();
    std::vector<std::uint64_t> keys(as.size() * bs.size());
    parallel_chunks(as.size(), [&](unsigned, std::size_t begin, std::size_t end) {
        std::size_t out = begin * bs.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (std::uint64_t bv : bs) {
                std::uint64_t g = gcd_u64(as[i], bv);
                keys[out++] = ((as[i] / g) << 32) | (bv / g);
            }
        }
    });
    return detail::count_distinct_keys(keys);
}

// Frac(C): distinct reduced fractions a/b over the points (a,b) of C.
inline std::uint64_t frac_count_grid(const GridPointSet& c) {
    if (c.points().empty()) return 0;
    detail::check_pack_range(c.bound_x(), "frac_count_grid");
    detail::check_pack_range(c.bound_y(), "frac_count_grid");
    std::vector<std::uint64_t> keys;
    keys.reserve(c.size());
    for (auto [a, b] : c.points()) {
        std::uint64_t g = gcd_u64(a, b);
        keys.push_back(((a / g) << 32) | (b / g));
    }
    return detail::count_distinct_keys(keys);
}

// |M(A,B,d)| for every d, by direct gcd of each pair. Chunks over A are
// counted independently and merged in index order.
inline GcdClassTable gcd_class_sizes(const IntegerSet& a, const IntegerSet& b) {
    GcdClassTable table;
    table.total_pairs = static_cast<std::uint64_t>(a.size()) * b.size();
    if (a.empty() || b.empty()) return table;
    detail::check_pair_budget(a, b);

    const auto& as = a.elements();
    const auto& bs = b.elements();
    std::uint64_t max_d = std::min(as.back(), bs.back());

    unsigned workers = worker_count();
    std::vector<std::vector<std::uint64_t>> local(workers);
    parallel_chunks(as.size(), [&](unsigned chunk, std::size_t begin, std::size_t end) {
        auto& counts = local[chunk % workers];
        counts.assign(static_cast<std::size_t>(max_d) + 1, 0);
        for (std::size_t i = begin; i < end; ++i)
            for (std::uint64_t bv : bs) ++counts[static_cast<std::size_t>(gcd_u64(as[i], bv))];
    });

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_d) + 1, 0);
    for (const auto& l : local) {
        if (l.empty()) continue;
        for (std::size_t d = 0; d < l.size(); ++d) counts[d] += l[d];
    }

    for (std::uint64_t d = 1; d <= max_d; ++d) {
        std::uint64_t n = counts[static_cast<std::size_t>(d)];
        if (n == 0) continue;
        table.sizes.emplace(d, n);
        if (n > table.sup_size) {
            table.sup_size = n;
            table.sup_d = d;
        }
    }
    return table;
}

} // namespace fracset
