#pragma once

// Kind 28: quantum plaintext, quantum ciphertext, 2-bit classical key.
// Encrypt conjugates a 1-qubit density matrix by U_k = Z^k1 X^k2; decrypt
// conjugates by U_k+. For these Pauli products U_k and U_k+ differ by at
// most a global sign, so either direction inverts the other exactly; tests
// pin that equality down rather than trusting it.

#include <stdexcept>

#include "qske/protocols/keys.hpp"
#include "qske/sim.hpp"

namespace qske {

inline DensityMatrix kind28_encrypt(const DensityMatrix& rho, const PqcKey& key) {
    if (rho.num_qubits() != 1) {
        throw std::invalid_argument("kind 28 encrypts one qubit at a time");
    }
    return apply_unitary(rho, pqc_unitary(key), {0});
}

inline DensityMatrix kind28_decrypt(const DensityMatrix& rho_c, const PqcKey& key) {
    if (rho_c.num_qubits() != 1) {
        throw std::invalid_argument("kind 28 decrypts one qubit at a time");
    }
    return apply_unitary(rho_c, pqc_unitary(key).dagger(), {0});
}

}  // namespace qske
