#pragma once

// Kind 3: classical bit x hidden in a t-bit parity share. The encryptor
// holds the uniform superposition over all t-bit strings of parity x, XORs
// the key through it, and collapses to one ciphertext. `Sampled` mode draws
// the share classically; `Simulated` mode runs the register-level circuit
// (H on the first t-1 qubits, parity CNOTs into the last, X where the key
// bit is set, then a full measurement). The two modes emit identically
// distributed ciphertexts; the simulated register tops out at t = 8.
//
// The key XOR acts in place on the share register: a separate output
// register would need 2t qubits and break the register cap at the largest
// allowed t, and for a XOR cipher the in-place circuit computes the same
// permutation of basis states.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qske/bitstring.hpp"
#include "qske/random.hpp"
#include "qske/sim.hpp"

namespace qske {

enum class Kind3Mode { Sampled, Simulated };

inline constexpr int kMaxSimulatedShares = 8;

struct Kind3Params {
    int t = 1;
    BitString k;
    Kind3Mode mode = Kind3Mode::Sampled;

    Kind3Params(int t_, BitString k_, Kind3Mode mode_) : t(t_), k(std::move(k_)), mode(mode_) {
        if (t < 1) throw std::invalid_argument("share count t must be >= 1");
        if (static_cast<int>(k.size()) != t) throw std::invalid_argument("key length must be t");
        if (mode == Kind3Mode::Simulated && t > kMaxSimulatedShares) {
            throw std::invalid_argument("simulated mode supports at most t = 8 shares");
        }
    }
};

inline BitString kind3_encrypt(int x, const Kind3Params& params, RandomSource& rng) {
    require_bit(x, "plaintext");
    const int t = params.t;

    if (params.mode == Kind3Mode::Sampled) {
        std::vector<std::uint8_t> share(static_cast<std::size_t>(t));
        int parity = 0;
        for (int i = 0; i + 1 < t; ++i) {
            const int b = rng.next_bit();
            share[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(b);
            parity ^= b;
        }
        share[static_cast<std::size_t>(t - 1)] = static_cast<std::uint8_t>(parity ^ x);
        return BitString(std::move(share)) ^ params.k;
    }

    StateVector reg = StateVector::basis(t, static_cast<std::uint64_t>(x));
    const UnitaryOperator h = standard_gate(Gate::H);
    const UnitaryOperator cnot = standard_gate(Gate::CNOT);
    for (int i = 0; i + 1 < t; ++i) reg = apply_unitary(reg, h, {i});
    for (int i = 0; i + 1 < t; ++i) reg = apply_unitary(reg, cnot, {i, t - 1});
    const UnitaryOperator x_gate = standard_gate(Gate::X);
    for (int i = 0; i < t; ++i) {
        if (params.k.bit(static_cast<std::size_t>(i))) reg = apply_unitary(reg, x_gate, {i});
    }

    std::vector<int> all_qubits(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) all_qubits[static_cast<std::size_t>(i)] = i;
    return measure_computational(reg, all_qubits, rng).outcome;
}

inline int kind3_decrypt(const BitString& c, const Kind3Params& params) {
    if (static_cast<int>(c.size()) != params.t) {
        throw std::invalid_argument("ciphertext length must be t");
    }
    return (c ^ params.k).parity();
}

}  // namespace qske
