#pragma once

// Kinds 4, 8, 20, 24: the XOR cipher lifted onto quantum algorithms.
// Wherever the kind's quintuple tags an object quantum, it is coded as a
// computational-basis state; the cipher itself runs bit by bit as a
// reversible 2-qubit circuit (CNOT from the key qubit onto the data qubit),
// and classical-tagged outputs are read out by measurement. Basis-state
// coding defines nothing for superposed inputs, so those are rejected.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qske/bitstring.hpp"
#include "qske/random.hpp"
#include "qske/report.hpp"
#include "qske/sim.hpp"
#include "qske/taxonomy.hpp"

namespace qske {

inline bool is_lift_kind(int kind) {
    return kind == 4 || kind == 8 || kind == 20 || kind == 24;
}

namespace detail {

// Index of the single unit-amplitude basis vector, if the state is one.
inline std::uint64_t decode_basis_state(const StateVector& s, const char* what) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (std::norm(s.amplitude(i)) >= 1.0 - 1e-9) return i;
    }
    throw std::invalid_argument(std::string(what) +
                                ": superposed input; basis-state coding is undefined here");
}

// One cipher bit through the reversible circuit: data qubit 0, key qubit 1.
inline int lift_xor_bit(int data, int key_bit, RandomSource& rng, bool measure_output) {
    StateVector reg = tensor(StateVector::basis(1, static_cast<std::uint64_t>(data)),
                             StateVector::basis(1, static_cast<std::uint64_t>(key_bit)));
    reg = apply_unitary(reg, standard_gate(Gate::CNOT), {1, 0});
    if (measure_output) return measure_computational(reg, {0}, rng).outcome.bit(0);
    return static_cast<int>(decode_basis_state(reg, "lift output") >> 1);
}

}  // namespace detail

inline TrialReport lift_classical(int kind, const BitString& m, const BitString& k,
                                  RandomSource& rng) {
    if (!is_lift_kind(kind)) {
        throw std::invalid_argument("lift_classical covers kinds 4, 8, 20, 24 only");
    }
    if (m.size() != k.size()) throw std::invalid_argument("plaintext/key length mismatch");
    if (m.size() < 1 || m.size() > 8) {
        throw std::invalid_argument("lift supports lengths 1 through 8");
    }

    const KindRecord record = kind_record(kind);
    const bool measure_plaintext = record.plaintext == Nature::Classical;

    BitString ciphertext = m, recovered = m;
    {
        std::vector<std::uint8_t> c(m.size()), r(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            // Ciphertext is classical in all four kinds, so encryption always
            // ends in a measurement; decryption measures only when the
            // plaintext side is classical.
            c[i] = static_cast<std::uint8_t>(detail::lift_xor_bit(m.bit(i), k.bit(i), rng, true));
            r[i] = static_cast<std::uint8_t>(
                detail::lift_xor_bit(c[i], k.bit(i), rng, measure_plaintext));
        }
        ciphertext = BitString(std::move(c));
        recovered = BitString(std::move(r));
    }

    TrialReport report;
    report.kind = kind;
    report.parameters["m"] = m.str();
    report.parameters["k"] = k.str();
    report.parameters["ciphertext"] = ciphertext.str();
    report.seed = rng.seed();
    report.algorithm_id = rng.algorithm_id();
    report.trials = 1;
    report.successes = (recovered == m) ? 1 : 0;
    report.notes = std::string("per-bit reversible XOR circuit; quintuple P=") +
                   to_char(record.plaintext) + " C=" + to_char(record.ciphertext) +
                   " K=" + to_char(record.key) + " E=" + to_char(record.encryption) +
                   " D=" + to_char(record.decryption) +
                   "; quantum-tagged values coded as basis states";
    return report;
}

inline TrialReport lift_classical(int kind, const StateVector& plaintext, const BitString& k,
                                  RandomSource& rng) {
    const std::uint64_t value = detail::decode_basis_state(plaintext, "lift plaintext");
    return lift_classical(kind, BitString::from_value(value, static_cast<std::size_t>(plaintext.num_qubits())),
                          k, rng);
}

}  // namespace qske
