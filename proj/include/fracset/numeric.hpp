#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fracset {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Binary gcd on machine words.
inline std::uint64_t gcd_u64(std::uint64_t u, std::uint64_t v) {
    if (u == 0) return v;
    if (v == 0) return u;
    int i = __builtin_ctzll(u);
    u >>= i;
    int j = __builtin_ctzll(v);
    v >>= j;
    int k = i < j ? i : j;
    for (;;) {
        if (u > v) {
            std::uint64_t t = u;
            u = v;
            v = t;
        }
        v -= u;
        if (v == 0) return u << k;
        v >>= __builtin_ctzll(v);
    }
}

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = __builtin_ctzll(d);
    d >>= s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// b^q in uint64; false on overflow.
inline bool pow_checked_u64(std::uint64_t b, unsigned q, std::uint64_t& out) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < q; ++i) {
        if (b != 0 && r > UINT64_MAX / b) return false;
        r *= b;
    }
    out = r;
    return true;
}

inline BigInt bigint_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

} // namespace fracset
