#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "fracset/fracstat.hpp"
#include "fracset/numeric.hpp"
#include "fracset/setcore.hpp"

namespace fracset {

// Witness for a small gap in the product sequence A.B: two distinct fractions
// a/b < a'/b' whose cross products b*a' and b'*a are close terms.
struct GapCertificate {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t a_prime = 0;
    std::uint64_t b_prime = 0;
    std::uint64_t term1 = 0;  // b * a'
    std::uint64_t term2 = 0;  // b' * a
    std::uint64_t gap = 0;    // term1 - term2 >= 1
    BigRat fraction_distance; // |a/b - a'/b'|, exact
};

// Sorted distinct products a*b <= limit.
inline std::vector<std::uint64_t> product_sequence(const IntegerSet& a, const IntegerSet& b,
                                                   std::uint64_t limit) {
    if (limit == 0) throw std::invalid_argument("product_sequence: limit must be >= 1");
    detail::check_pair_budget(a, b);
    std::vector<std::uint64_t> terms;
    for (std::uint64_t av : a.elements()) {
        if (av > limit) break;
        for (std::uint64_t bv : b.elements()) {
            if (bv > limit / av) break;
            terms.push_back(av * bv);
        }
    }
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    return terms;
}

struct MinGap {
    std::uint64_t gap = 0;
    std::uint64_t lo = 0;  // first adjacent pair attaining the minimum
    std::uint64_t hi = 0;
};

inline MinGap min_consecutive_gap(std::span<const std::uint64_t> terms) {
    if (terms.size() < 2) throw std::invalid_argument("min_consecutive_gap: need at least 2 terms");
    MinGap best{UINT64_MAX, 0, 0};
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        std::uint64_t g = terms[i + 1] - terms[i];
        if (g < best.gap) best = {g, terms[i], terms[i + 1]};
    }
    return best;
}

// Certificate for the minimum of |a*b' - a'*b| over all pairs of distinct
// fractions of A/B, with A in (X/2, X] and B in (Y/2, Y].
//
// Any pair of distinct products u = a1*b1 < v = a2*b2 is realized as the
// cross products of the distinct fractions a1/b2 and a2/b1, and conversely
// every cross-product pair consists of two distinct products. The minimum is
// therefore the smallest gap between consecutive distinct values of A.B,
// which a single sorted scan finds exactly.
inline GapCertificate small_gap_certificate(const IntegerSet& a, const IntegerSet& b) {
    const std::uint64_t x = a.ambient_bound();
    const std::uint64_t y = b.ambient_bound();
    if (y != 0 && x > UINT64_MAX / y)
        throw std::length_error("small_gap_certificate: X*Y overflows the product range");
    for (std::uint64_t v : a.elements())
        if (2 * v <= x) throw std::invalid_argument("small_gap_certificate: A must lie in (X/2, X]");
    for (std::uint64_t v : b.elements())
        if (2 * v <= y) throw std::invalid_argument("small_gap_certificate: B must lie in (Y/2, Y]");
    detail::check_pair_budget(a, b);

    // products with the smallest first factor kept per value
    std::vector<std::pair<std::uint64_t, std::uint64_t>> prods;  // (a*b, a)
    prods.reserve(a.size() * b.size());
    for (std::uint64_t av : a.elements())
        for (std::uint64_t bv : b.elements()) prods.emplace_back(av * bv, av);
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end(),
                            [](const auto& l, const auto& r) { return l.first == r.first; }),
                prods.end());
    if (prods.size() < 2)
        throw std::invalid_argument("small_gap_certificate: fewer than two distinct fractions");

    std::size_t at = 0;
    std::uint64_t best = UINT64_MAX;
    for (std::size_t i = 0; i + 1 < prods.size(); ++i) {
        std::uint64_t g = prods[i + 1].first - prods[i].first;
        if (g < best) {
            best = g;
            at = i;
        }
    }

    const std::uint64_t u = prods[at].first, a1 = prods[at].second, b1 = u / a1;
    const std::uint64_t v = prods[at + 1].first, a2 = prods[at + 1].second, b2 = v / a2;

    GapCertificate cert;
    cert.a = a1;        // fraction a1/b2
    cert.b = b2;
    cert.a_prime = a2;  // fraction a2/b1 (the larger one: v/u > 1)
    cert.b_prime = b1;
    cert.term1 = cert.b * cert.a_prime;   // = v
    cert.term2 = cert.b_prime * cert.a;   // = u
    cert.gap = cert.term1 - cert.term2;
    cert.fraction_distance = BigRat(BigInt(v) - BigInt(u), BigInt(b1) * BigInt(b2));
    return cert;
}

} // namespace fracset
