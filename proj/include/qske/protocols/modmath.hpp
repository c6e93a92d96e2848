#pragma once

// Modular arithmetic over small prime moduli (q <= 10^4, so 64-bit products
// never overflow). Enough for the toy group-based cipher; nothing here is
// meant to scale.

#include <cstdint>
#include <stdexcept>

namespace qske {

inline std::uint64_t modmul(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    return (a % q) * (b % q) % q;
}

inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("modpow: zero modulus");
    std::uint64_t result = 1 % q;
    base %= q;
    while (exp > 0) {
        if (exp & 1) result = modmul(result, base, q);
        base = modmul(base, base, q);
        exp >>= 1;
    }
    return result;
}

inline bool is_small_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

// Multiplicative order of g mod prime q, by direct iteration.
inline std::uint64_t multiplicative_order(std::uint64_t g, std::uint64_t q) {
    g %= q;
    if (g == 0) throw std::invalid_argument("multiplicative_order: g not a unit");
    std::uint64_t acc = g % q;
    std::uint64_t order = 1;
    while (acc != 1) {
        acc = modmul(acc, g, q);
        ++order;
        if (order >= q) throw std::logic_error("multiplicative_order: runaway loop");
    }
    return order;
}

inline bool generates_full_group(std::uint64_t g, std::uint64_t q) {
    if (g % q == 0) return false;
    return multiplicative_order(g, q) == q - 1;
}

// Inverse of a mod prime q via Fermat's little theorem.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t q) {
    a %= q;
    if (a == 0) throw std::invalid_argument("mod_inverse: zero has no inverse");
    return modpow(a, q - 2, q);
}

}  // namespace qske
