#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fracset/numeric.hpp"

namespace fracset {

// A finite set of positive integers inside [1, ambient_bound], stored as a
// sorted dense array. Immutable after construction.
class IntegerSet {
public:
    IntegerSet() = default;

    IntegerSet(std::vector<std::uint64_t> elements, std::uint64_t ambient_bound)
        : elements_(std::move(elements)), ambient_bound_(ambient_bound) {
        if (ambient_bound_ == 0) throw std::invalid_argument("IntegerSet: ambient_bound must be >= 1");
        std::sort(elements_.begin(), elements_.end());
        for (std::size_t i = 0; i < elements_.size(); ++i) {
            if (elements_[i] == 0) throw std::invalid_argument("IntegerSet: elements must be >= 1");
            if (elements_[i] > ambient_bound_) throw std::invalid_argument("IntegerSet: element exceeds ambient_bound");
            if (i > 0 && elements_[i] == elements_[i - 1]) throw std::invalid_argument("IntegerSet: duplicate element");
        }
    }

    const std::vector<std::uint64_t>& elements() const { return elements_; }
    std::uint64_t ambient_bound() const { return ambient_bound_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    double density() const {
        return static_cast<double>(elements_.size()) / static_cast<double>(ambient_bound_);
    }

    bool contains(std::uint64_t v) const {
        return std::binary_search(elements_.begin(), elements_.end(), v);
    }

private:
    std::vector<std::uint64_t> elements_;
    std::uint64_t ambient_bound_ = 1;
};

// A finite set of integer points in [1, bound_x] x [1, bound_y].
class GridPointSet {
public:
    using Point = std::pair<std::uint64_t, std::uint64_t>;

    GridPointSet() = default;

    GridPointSet(std::vector<Point> points, std::uint64_t bound_x, std::uint64_t bound_y)
        : points_(std::move(points)), bound_x_(bound_x), bound_y_(bound_y) {
        if (bound_x_ == 0 || bound_y_ == 0) throw std::invalid_argument("GridPointSet: bounds must be >= 1");
        std::sort(points_.begin(), points_.end());
        for (std::size_t i = 0; i < points_.size(); ++i) {
            auto [a, b] = points_[i];
            if (a == 0 || b == 0) throw std::invalid_argument("GridPointSet: coordinates must be >= 1");
            if (a > bound_x_ || b > bound_y_) throw std::invalid_argument("GridPointSet: point outside bounds");
            if (i > 0 && points_[i] == points_[i - 1]) throw std::invalid_argument("GridPointSet: duplicate point");
        }
    }

    const std::vector<Point>& points() const { return points_; }
    std::uint64_t bound_x() const { return bound_x_; }
    std::uint64_t bound_y() const { return bound_y_; }
    std::size_t size() const { return points_.size(); }

private:
    std::vector<Point> points_;
    std::uint64_t bound_x_ = 1;
    std::uint64_t bound_y_ = 1;
};

// Primes up to limit by plain Eratosthenes.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<char> mark(static_cast<std::size_t>(limit) + 1, 1);
    mark[0] = mark[1] = 0;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (mark[static_cast<std::size_t>(i)])
            for (std::uint64_t j = i * i; j <= limit; j += i) mark[static_cast<std::size_t>(j)] = 0;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (mark[static_cast<std::size_t>(i)]) primes.push_back(i);
    return primes;
}

// Primes in [lo, hi] via a segmented sieve; base primes go up to sqrt(hi).
inline std::vector<std::uint64_t> primes_in_interval(std::uint64_t lo, std::uint64_t hi) {
    if (lo == 0 || lo > hi) throw std::invalid_argument("primes_in_interval: need 1 <= lo <= hi");
    std::vector<std::uint64_t> out;
    if (hi < 2) return out;
    if (lo < 2) lo = 2;

    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(hi)));
    while (root > 0 && root * root > hi) --root;
    while ((root + 1) * (root + 1) <= hi) ++root;
    auto base = primes_up_to(root);

    constexpr std::uint64_t segment = 1 << 20;
    for (std::uint64_t low = lo; low <= hi; low += segment) {
        std::uint64_t high = std::min(hi, low + segment - 1);
        std::vector<char> is_prime(static_cast<std::size_t>(high - low) + 1, 1);
        for (std::uint64_t p : base) {
            std::uint64_t start = ((low + p - 1) / p) * p;
            if (start < p * p) start = p * p;
            for (std::uint64_t j = start; j <= high; j += p) is_prime[static_cast<std::size_t>(j - low)] = 0;
        }
        for (std::uint64_t n = low; n <= high; ++n)
            if (is_prime[static_cast<std::size_t>(n - low)]) out.push_back(n);
        if (high == hi) break; // avoid wrap when hi is near UINT64_MAX
    }
    return out;
}

// {n <= x : some divisor divides n}. Rejects an empty divisor list.
inline IntegerSet multiples_of_any(const std::vector<std::uint64_t>& divisors, std::uint64_t x) {
    if (divisors.empty()) throw std::invalid_argument("multiples_of_any: divisor list is empty");
    if (x == 0) throw std::invalid_argument("multiples_of_any: x must be >= 1");
    for (std::uint64_t d : divisors)
        if (d == 0) throw std::invalid_argument("multiples_of_any: divisors must be >= 1");
    std::vector<char> hit(static_cast<std::size_t>(x) + 1, 0);
    for (std::uint64_t d : divisors)
        for (std::uint64_t n = d; n <= x; n += d) hit[static_cast<std::size_t>(n)] = 1;
    std::vector<std::uint64_t> elems;
    for (std::uint64_t n = 1; n <= x; ++n)
        if (hit[static_cast<std::size_t>(n)]) elems.push_back(n);
    return IntegerSet(std::move(elems), x);
}

// A_d = {a in A : d | a}, same ambient bound.
inline IntegerSet multiples_in(const IntegerSet& a, std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("multiples_in: d must be >= 1");
    std::vector<std::uint64_t> elems;
    for (std::uint64_t v : a.elements())
        if (v % d == 0) elems.push_back(v);
    return IntegerSet(std::move(elems), a.ambient_bound());
}

// k*A = {k*a : a in A} with ambient bound k*X.
inline IntegerSet dilate(const IntegerSet& a, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("dilate: k must be >= 1");
    std::vector<std::uint64_t> elems;
    elems.reserve(a.size());
    for (std::uint64_t v : a.elements()) elems.push_back(v * k);
    return IntegerSet(std::move(elems), a.ambient_bound() * k);
}

// A intersected with (x/2, x], ambient bound x.
inline IntegerSet window(const IntegerSet& a, std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("window: x must be >= 1");
    std::vector<std::uint64_t> elems;
    for (std::uint64_t v : a.elements())
        if (2 * v > x && v <= x) elems.push_back(v);
    return IntegerSet(std::move(elems), x);
}

// Set-file ingestion: header line "# ambient_bound=<X>", then one positive
// integer per line. Duplicates are rejected.
inline IntegerSet read_set_stream(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("set file: empty input");
    const std::string prefix = "# ambient_bound=";
    if (line.rfind(prefix, 0) != 0) throw std::invalid_argument("set file: missing '# ambient_bound=<X>' header");
    std::uint64_t bound = 0;
    try {
        std::size_t pos = 0;
        bound = std::stoull(line.substr(prefix.size()), &pos);
        if (pos != line.size() - prefix.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("set file: bad ambient_bound value");
    }
    std::vector<std::uint64_t> elems;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::uint64_t v = 0;
        try {
            std::size_t pos = 0;
            v = std::stoull(line, &pos);
            if (pos != line.size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("set file: bad integer at line " + std::to_string(lineno));
        }
        elems.push_back(v);
    }
    std::vector<std::uint64_t> sorted = elems;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("set file: duplicate line");
    return IntegerSet(std::move(elems), bound);
}

inline IntegerSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("set file: cannot open " + path);
    return read_set_stream(in);
}

} // namespace fracset
