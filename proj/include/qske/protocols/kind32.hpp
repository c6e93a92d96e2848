#pragma once

// Kind 32: everything quantum. The key is the entangled pair in density
// form; encryption couples the plaintext qubit to Alice's half with a CNOT,
// decryption undoes it from Bob's half, checks that the joint state factors
// into key x plaintext, and returns the message register.
//
// Register layout as in kind 16: A = 0, B = 1, message = 2.

#include <stdexcept>
#include <utility>

#include "qske/protocols/keys.hpp"
#include "qske/sim.hpp"

namespace qske {

inline EntangledKeyHandle kind32_setup() {
    return EntangledKeyHandle::from_density(DensityMatrix::pure(bell_state()));
}

inline DensityMatrix kind32_encrypt(const DensityMatrix& rho, EntangledKeyHandle& key) {
    if (rho.num_qubits() != 1) {
        throw std::invalid_argument("kind 32 encrypts one qubit at a time");
    }
    const DensityMatrix joint = tensor(key.density_form(), rho);
    key.consume();
    return apply_unitary(joint, standard_gate(Gate::CNOT), {key.alice_register(), 2});
}

inline DensityMatrix kind32_decrypt(const DensityMatrix& joint, EntangledKeyHandle& key) {
    if (joint.num_qubits() != 3) throw std::invalid_argument("ciphertext must span 3 qubits");
    const DensityMatrix undone =
        apply_unitary(joint, standard_gate(Gate::CNOT), {key.bob_register(), 2});

    DensityMatrix key_part = partial_trace(undone, {0, 1});
    DensityMatrix message = partial_trace(undone, {2});
    if (max_abs_diff(undone.entries(), kron(key_part.entries(), message.entries())) > 1e-10) {
        throw std::runtime_error(
            "kind 32 decrypt: joint state does not factor into key x plaintext "
            "(tampered or invalid ciphertext)");
    }
    key.restore(std::move(key_part));
    return message;
}

}  // namespace qske
