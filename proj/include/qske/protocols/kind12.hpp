#pragma once

// Kind 12: classical bit in, quantum ciphertext out, 2-bit classical key.
// Encrypt: Y^k2 H^k1 |x>. Decrypt: measure in basis k1 (0 = computational,
// 1 = the +/- basis) and flip the outcome by k2; on honest ciphertexts the
// reported branch has Born probability 1.

#include <stdexcept>

#include "qske/protocols/keys.hpp"
#include "qske/sim.hpp"

namespace qske {

inline StateVector kind12_encrypt(int x, const PqcKey& key) {
    require_bit(x, "plaintext");
    StateVector state = StateVector::basis(1, static_cast<std::uint64_t>(x));
    if (key.k1) state = apply_unitary(state, standard_gate(Gate::H), {0});
    if (key.k2) state = apply_unitary(state, standard_gate(Gate::Y), {0});
    return state;
}

inline int kind12_decrypt(const StateVector& c, const PqcKey& key, RandomSource& rng) {
    if (c.num_qubits() != 1) throw std::invalid_argument("ciphertext must be a single qubit");
    const MeasurementRecord record = measure_in_basis(c, 0, key.k1, rng);
    return record.outcome.bit(0) ^ key.k2;
}

}  // namespace qske
