#pragma once

// Kind 2: classical data, quantum decryption algorithm. A toy multiplicative
// ElGamal over a small prime field; the decryptor never touches the secret
// exponent and instead recovers the ephemeral y through a discrete-log
// oracle (brute force here -- the stand-in for the assumed quantum solver).

#include <cstdint>
#include <stdexcept>

#include "qske/protocols/keys.hpp"
#include "qske/protocols/modmath.hpp"
#include "qske/random.hpp"

namespace qske {

struct Kind2Ciphertext {
    std::uint64_t c1 = 0;  // g^y mod q
    std::uint64_t c2 = 0;  // h^y * m mod q
};

// Unique s in [0, q-2] with a^s = b (mod q), for a of full order.
inline std::uint64_t dlog_oracle(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
    if (b == 0 || b >= q) throw std::invalid_argument("dlog_oracle: b outside [1, q-1]");
    std::uint64_t power = 1 % q;
    for (std::uint64_t s = 0; s + 1 < q; ++s) {
        if (power == b) return s;
        power = modmul(power, a, q);
    }
    throw std::invalid_argument("dlog_oracle: b not in the subgroup generated by a");
}

inline Kind2Ciphertext kind2_encrypt(std::uint64_t m, const ElGamalKey& key, RandomSource& rng) {
    if (m == 0 || m >= key.q) {
        throw std::invalid_argument("message must be a group element in [1, q-1]");
    }
    const std::uint64_t y = 1 + rng.next_below(key.q - 1);  // uniform over [1, q-1]
    return Kind2Ciphertext{modpow(key.g, y, key.q), modmul(modpow(key.h, y, key.q), m, key.q)};
}

inline std::uint64_t kind2_decrypt(const Kind2Ciphertext& c, const ElGamalKey& key) {
    const std::uint64_t y = dlog_oracle(key.g, c.c1, key.q);
    return modmul(c.c2, mod_inverse(modpow(key.h, y, key.q), key.q), key.q);
}

}  // namespace qske
