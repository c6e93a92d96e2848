#pragma once

// Kind 16: classical bit plaintext, entangled 2-qubit key, quantum
// ciphertext. Register layout of the joint state: qubit 0 = Alice's key
// half (A), qubit 1 = Bob's key half (B), qubit 2 = message.
//
// Encrypt: append |x> and CNOT from A onto it; the transmitted message
// qubit alone is maximally mixed. Decrypt: CNOT from B onto the message,
// measure it; the outcome is x with probability 1 and the key registers
// return to the original entangled pair, which re-arms the handle.

#include <stdexcept>

#include "qske/protocols/keys.hpp"
#include "qske/sim.hpp"

namespace qske {

inline EntangledKeyHandle kind16_setup() { return EntangledKeyHandle::from_state(bell_state()); }

inline StateVector kind16_encrypt(int x, EntangledKeyHandle& key) {
    require_bit(x, "plaintext");
    const StateVector joint =
        tensor(key.vector_form(), StateVector::basis(1, static_cast<std::uint64_t>(x)));
    key.consume();
    return apply_unitary(joint, standard_gate(Gate::CNOT), {key.alice_register(), 2});
}

inline int kind16_decrypt(const StateVector& joint, EntangledKeyHandle& key, RandomSource& rng) {
    if (joint.num_qubits() != 3) throw std::invalid_argument("ciphertext must span 3 qubits");
    const StateVector undone =
        apply_unitary(joint, standard_gate(Gate::CNOT), {key.bob_register(), 2});
    const MeasurementRecord record = measure_computational(undone, {2}, rng);
    const int x = record.outcome.bit(0);

    // The message qubit is now exactly |x>, so the key halves factor out as
    // a pure 2-qubit state; hand it back to the key handle.
    CVector residual(4);
    for (std::size_t ab = 0; ab < 4; ++ab) {
        residual[ab] = record.post_state.amplitude((ab << 1) | static_cast<std::size_t>(x));
    }
    key.restore(StateVector(2, std::move(residual)));
    return x;
}

}  // namespace qske
