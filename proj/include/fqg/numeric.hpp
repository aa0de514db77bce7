#ifndef FQG_NUMERIC_HPP
#define FQG_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "fqg/error.hpp"

namespace fqg {

using BigInt = boost::multiprecision::cpp_int;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// p^k if it stays below 2^63, otherwise nullopt.
inline std::optional<std::uint64_t> checked_power(std::uint64_t p, unsigned k) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 63U;
    std::uint64_t value = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (value > (kLimit - 1) / p) return std::nullopt;
        value *= p;
    }
    return value;
}

inline std::uint64_t isqrt(std::uint64_t n) {
    std::uint64_t r = 0;
    for (std::uint64_t bit = std::uint64_t{1} << 62U; bit != 0; bit >>= 2U) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1U) + bit;
        } else {
            r >>= 1U;
        }
    }
    return r;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (std::gcd(a, m) != 1) throw InvariantError("multiplicative_order: arguments not coprime");
    std::uint64_t x = a % m;
    std::uint64_t order = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++order;
    }
    return order;
}

}  // namespace fqg

#endif  // FQG_NUMERIC_HPP
