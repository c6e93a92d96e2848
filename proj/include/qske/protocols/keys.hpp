#pragma once

// Key material shared by the protocol implementations: the 2-bit classical
// key, the entangled 2-qubit key handle, and the group-element key of the
// toy public-parameter cipher.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <variant>

#include "qske/bitstring.hpp"
#include "qske/protocols/modmath.hpp"
#include "qske/sim.hpp"

namespace qske {

struct PqcKey {
    int k1 = 0;
    int k2 = 0;

    PqcKey() = default;
    PqcKey(int k1_, int k2_) : k1(k1_), k2(k2_) {
        require_bit(k1, "k1");
        require_bit(k2, "k2");
    }
};

// Z^k1 X^k2 as a single-qubit operator.
inline UnitaryOperator pqc_unitary(const PqcKey& key) {
    CMatrix m = CMatrix::identity(2);
    if (key.k2) m = standard_gate(Gate::X).entries() * m;
    if (key.k1) m = standard_gate(Gate::Z).entries() * m;
    return UnitaryOperator(1, std::move(m));
}

// A 2-qubit maximally entangled key, one register per party. The handle is
// single-use: encryption consumes it, decryption restores it. Both the pure
// (state-vector) and density-matrix presentations are supported because the
// two protocols that use it are written in different forms.
class EntangledKeyHandle {
public:
    static EntangledKeyHandle from_state(StateVector joint) {
        EntangledKeyHandle h;
        h.validate(joint.density());
        h.joint_ = std::move(joint);
        return h;
    }

    static EntangledKeyHandle from_density(DensityMatrix joint) {
        EntangledKeyHandle h;
        h.validate(joint);
        h.joint_ = std::move(joint);
        return h;
    }

    int alice_register() const { return 0; }
    int bob_register() const { return 1; }
    bool consumed() const { return consumed_; }
    bool holds_vector() const { return std::holds_alternative<StateVector>(joint_); }

    const StateVector& vector_form() const {
        if (!holds_vector()) throw std::logic_error("key handle holds a density matrix");
        return std::get<StateVector>(joint_);
    }

    DensityMatrix density_form() const {
        if (holds_vector()) return std::get<StateVector>(joint_).density();
        return std::get<DensityMatrix>(joint_);
    }

    void consume() {
        if (consumed_) throw std::logic_error("entangled key handle already consumed");
        consumed_ = true;
    }

    void restore(StateVector joint) {
        validate(joint.density());
        joint_ = std::move(joint);
        consumed_ = false;
    }

    void restore(DensityMatrix joint) {
        validate(joint);
        joint_ = std::move(joint);
        consumed_ = false;
    }

private:
    EntangledKeyHandle() : joint_(bell_state()) {}

    static void validate(const DensityMatrix& joint) {
        if (joint.num_qubits() != 2) {
            throw std::invalid_argument("entangled key must span exactly 2 qubits");
        }
        const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
        for (int reg : {0, 1}) {
            if (trace_distance(partial_trace(joint, {reg}), mixed) > 1e-9) {
                throw std::invalid_argument(
                    "entangled key: reduced state on a register is not maximally mixed");
            }
        }
    }

    std::variant<StateVector, DensityMatrix> joint_;
    bool consumed_ = false;
};

inline constexpr std::uint64_t kMaxGroupModulus = 10000;

// (q, g) are public parameters; h = g^s is the published element and s the
// secret exponent, kept here so tests can exercise key generation.
struct ElGamalKey {
    std::uint64_t q = 0;
    std::uint64_t g = 0;
    std::uint64_t h = 0;
    std::uint64_t s = 0;
};

inline ElGamalKey make_elgamal_key(std::uint64_t q, std::uint64_t g, std::uint64_t s) {
    if (q < 3 || q > kMaxGroupModulus || !is_small_prime(q)) {
        throw std::invalid_argument("modulus must be an odd prime <= 10000");
    }
    if (g < 1 || g >= q || !generates_full_group(g, q)) {
        throw std::invalid_argument("g must generate the full multiplicative group mod q");
    }
    if (s > q - 2) throw std::invalid_argument("secret exponent must lie in [0, q-2]");
    return ElGamalKey{q, g, modpow(g, s, q), s};
}

}  // namespace qske
