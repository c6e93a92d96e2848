#pragma once

// Dense simulator for small qubit registers: state vectors, density
// matrices, unitaries, composition, projective measurement, and the
// distance/equality metrics the protocol checks are written against.
//
// Register convention, fixed project-wide: qubit 0 carries the MOST
// significant bit of a basis index. |q0 q1 q2> = |q0>|q1>|q2>, so
// tensor(a, b) appends b's qubits after a's.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qske/bitstring.hpp"
#include "qske/linalg.hpp"
#include "qske/random.hpp"

namespace qske {

inline constexpr int kMaxQubits = 10;

inline constexpr double kStateNormTol = 1e-9;   // | <s|s> - 1 |
inline constexpr double kDensityTol = 1e-9;     // hermiticity / trace defect
inline constexpr double kPsdTol = 1e-9;         // smallest admissible eigenvalue is -kPsdTol
inline constexpr double kUnitaryTol = 1e-10;    // entrywise | U U+ - I |

namespace detail {

inline void check_register_size(int num_qubits) {
    if (num_qubits < 0) throw std::invalid_argument("register size must be non-negative");
    if (num_qubits > kMaxQubits) {
        throw std::invalid_argument("register size exceeds the " +
                                    std::to_string(kMaxQubits) + "-qubit cap");
    }
}

inline std::size_t dimension_of(int num_qubits) {
    return std::size_t{1} << num_qubits;
}

inline void check_targets(const std::vector<int>& targets, int num_qubits) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0 || targets[i] >= num_qubits) {
            throw std::invalid_argument("target qubit index out of range");
        }
        for (std::size_t j = i + 1; j < targets.size(); ++j) {
            if (targets[i] == targets[j]) {
                throw std::invalid_argument("repeated target qubit index");
            }
        }
    }
}

}  // namespace detail

class DensityMatrix;

class StateVector {
public:
    StateVector(int num_qubits, CVector amplitudes)
        : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
        detail::check_register_size(num_qubits_);
        if (amps_.size() != detail::dimension_of(num_qubits_)) {
            throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
        }
        double norm2 = 0.0;
        for (const auto& a : amps_) {
            if (!is_finite(a)) throw std::invalid_argument("StateVector: non-finite amplitude");
            norm2 += std::norm(a);
        }
        if (std::abs(norm2 - 1.0) > kStateNormTol) {
            throw std::invalid_argument("StateVector: not normalized");
        }
    }

    static StateVector basis(int num_qubits, std::uint64_t index) {
        detail::check_register_size(num_qubits);
        const std::size_t dim = detail::dimension_of(num_qubits);
        if (index >= dim) throw std::invalid_argument("basis index out of range");
        CVector amps(dim);
        amps[index] = 1.0;
        return StateVector(num_qubits, std::move(amps));
    }

    static StateVector from_bits(const BitString& bits) {
        return basis(static_cast<int>(bits.size()), bits.value());
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const CVector& amplitudes() const { return amps_; }
    Complex amplitude(std::size_t i) const { return amps_.at(i); }

    int qubit_bit(std::size_t index, int qubit) const {
        return static_cast<int>((index >> (num_qubits_ - 1 - qubit)) & 1u);
    }

    DensityMatrix density() const;

private:
    int num_qubits_;
    CVector amps_;
};

class DensityMatrix {
public:
    DensityMatrix(int num_qubits, CMatrix entries)
        : num_qubits_(num_qubits), entries_(std::move(entries)) {
        detail::check_register_size(num_qubits_);
        const std::size_t dim = detail::dimension_of(num_qubits_);
        if (entries_.rows() != dim || entries_.cols() != dim) {
            throw std::invalid_argument("DensityMatrix: entries must be 2^n x 2^n");
        }
        if (!is_finite(entries_)) throw std::invalid_argument("DensityMatrix: non-finite entry");
        if (hermiticity_defect(entries_) > kDensityTol) {
            throw std::invalid_argument("DensityMatrix: not Hermitian");
        }
        if (std::abs(trace(entries_) - Complex{1.0}) > kDensityTol) {
            throw std::invalid_argument("DensityMatrix: trace must be 1");
        }
        if (!is_positive_semidefinite(entries_, kPsdTol + 1e-12)) {
            throw std::invalid_argument("DensityMatrix: negative eigenvalue");
        }
    }

    static DensityMatrix pure(const StateVector& s) {
        const std::size_t dim = s.dim();
        CMatrix m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                m(r, c) = s.amplitude(r) * std::conj(s.amplitude(c));
            }
        }
        return DensityMatrix(s.num_qubits(), std::move(m));
    }

    static DensityMatrix maximally_mixed(int num_qubits) {
        detail::check_register_size(num_qubits);
        const std::size_t dim = detail::dimension_of(num_qubits);
        CMatrix m = CMatrix::identity(dim);
        return DensityMatrix(num_qubits, (Complex{1.0 / static_cast<double>(dim)}) * m);
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return entries_.rows(); }
    const CMatrix& entries() const { return entries_; }

private:
    int num_qubits_;
    CMatrix entries_;
};

inline DensityMatrix StateVector::density() const { return DensityMatrix::pure(*this); }

class UnitaryOperator {
public:
    UnitaryOperator(int num_qubits, CMatrix entries)
        : num_qubits_(num_qubits), entries_(std::move(entries)) {
        detail::check_register_size(num_qubits_);
        const std::size_t dim = detail::dimension_of(num_qubits_);
        if (entries_.rows() != dim || entries_.cols() != dim) {
            throw std::invalid_argument("UnitaryOperator: entries must be 2^n x 2^n");
        }
        if (!is_finite(entries_)) throw std::invalid_argument("UnitaryOperator: non-finite entry");
        const CMatrix product = entries_ * adjoint(entries_);
        if (max_abs_diff(product, CMatrix::identity(dim)) > kUnitaryTol) {
            throw std::invalid_argument("UnitaryOperator: U U+ deviates from identity");
        }
    }

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return entries_.rows(); }
    const CMatrix& entries() const { return entries_; }

    UnitaryOperator dagger() const { return UnitaryOperator(num_qubits_, adjoint(entries_)); }

private:
    int num_qubits_;
    CMatrix entries_;
};

// ---------------------------------------------------------------------------
// Standard gates

enum class Gate { X, Y, Z, H, CNOT };

inline UnitaryOperator standard_gate(Gate g) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (g) {
        case Gate::X:
            return UnitaryOperator(1, CMatrix(2, 2, {0, 1, 1, 0}));
        case Gate::Y:
            return UnitaryOperator(1, CMatrix(2, 2, {0, Complex(0, -1), Complex(0, 1), 0}));
        case Gate::Z:
            return UnitaryOperator(1, CMatrix(2, 2, {1, 0, 0, -1}));
        case Gate::H:
            return UnitaryOperator(
                1, CMatrix(2, 2, {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2}));
        case Gate::CNOT:
            // Control is the gate's qubit 0, target its qubit 1.
            return UnitaryOperator(2, CMatrix(4, 4,
                                              {1, 0, 0, 0,
                                               0, 1, 0, 0,
                                               0, 0, 0, 1,
                                               0, 0, 1, 0}));
    }
    throw std::invalid_argument("unknown gate");
}

inline UnitaryOperator standard_gate(std::string_view name) {
    if (name == "X") return standard_gate(Gate::X);
    if (name == "Y") return standard_gate(Gate::Y);
    if (name == "Z") return standard_gate(Gate::Z);
    if (name == "H") return standard_gate(Gate::H);
    if (name == "CNOT") return standard_gate(Gate::CNOT);
    throw std::invalid_argument("unknown gate name: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Composition

inline StateVector tensor(const StateVector& a, const StateVector& b) {
    detail::check_register_size(a.num_qubits() + b.num_qubits());
    CVector amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            amps[i * b.dim() + j] = a.amplitude(i) * b.amplitude(j);
        }
    }
    return StateVector(a.num_qubits() + b.num_qubits(), std::move(amps));
}

inline UnitaryOperator tensor(const UnitaryOperator& a, const UnitaryOperator& b) {
    detail::check_register_size(a.num_qubits() + b.num_qubits());
    return UnitaryOperator(a.num_qubits() + b.num_qubits(), kron(a.entries(), b.entries()));
}

inline DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    detail::check_register_size(a.num_qubits() + b.num_qubits());
    return DensityMatrix(a.num_qubits() + b.num_qubits(), kron(a.entries(), b.entries()));
}

namespace detail {

// Basis-index scatter of a gate-local index onto register positions.
inline std::vector<std::uint64_t> target_offsets(const std::vector<int>& targets,
                                                 int num_qubits) {
    const int k = static_cast<int>(targets.size());
    const std::size_t sub_dim = dimension_of(k);
    std::vector<std::uint64_t> offsets(sub_dim, 0);
    for (std::size_t s = 0; s < sub_dim; ++s) {
        for (int j = 0; j < k; ++j) {
            if ((s >> (k - 1 - j)) & 1u) {
                offsets[s] |= std::uint64_t{1} << (num_qubits - 1 - targets[j]);
            }
        }
    }
    return offsets;
}

inline std::uint64_t target_mask(const std::vector<int>& targets, int num_qubits) {
    std::uint64_t mask = 0;
    for (int t : targets) mask |= std::uint64_t{1} << (num_qubits - 1 - t);
    return mask;
}

}  // namespace detail

inline StateVector apply_unitary(const StateVector& state, const UnitaryOperator& u,
                                 const std::vector<int>& targets) {
    if (static_cast<int>(targets.size()) != u.num_qubits()) {
        throw std::invalid_argument("apply_unitary: target count must match operator size");
    }
    detail::check_targets(targets, state.num_qubits());

    const std::size_t dim = state.dim();
    const std::size_t sub_dim = detail::dimension_of(static_cast<int>(targets.size()));
    const auto offsets = detail::target_offsets(targets, state.num_qubits());
    const std::uint64_t mask = detail::target_mask(targets, state.num_qubits());

    CVector amps = state.amplitudes();
    CVector gathered(sub_dim);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t s = 0; s < sub_dim; ++s) gathered[s] = amps[base | offsets[s]];
        for (std::size_t r = 0; r < sub_dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t s = 0; s < sub_dim; ++s) acc += u.entries()(r, s) * gathered[s];
            amps[base | offsets[r]] = acc;
        }
    }
    return StateVector(state.num_qubits(), std::move(amps));
}

// Expands u acting on `targets` to the full register.
inline UnitaryOperator embed(const UnitaryOperator& u, const std::vector<int>& targets,
                             int num_qubits) {
    if (static_cast<int>(targets.size()) != u.num_qubits()) {
        throw std::invalid_argument("embed: target count must match operator size");
    }
    detail::check_targets(targets, num_qubits);
    detail::check_register_size(num_qubits);

    const std::size_t dim = detail::dimension_of(num_qubits);
    const std::size_t sub_dim = u.dim();
    const auto offsets = detail::target_offsets(targets, num_qubits);
    const std::uint64_t mask = detail::target_mask(targets, num_qubits);

    CMatrix full(dim, dim);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t r = 0; r < sub_dim; ++r) {
            for (std::size_t c = 0; c < sub_dim; ++c) {
                full(base | offsets[r], base | offsets[c]) = u.entries()(r, c);
            }
        }
    }
    return UnitaryOperator(num_qubits, std::move(full));
}

inline DensityMatrix apply_unitary(const DensityMatrix& rho, const UnitaryOperator& u,
                                   const std::vector<int>& targets) {
    const UnitaryOperator full = embed(u, targets, rho.num_qubits());
    CMatrix conjugated = full.entries() * rho.entries() * adjoint(full.entries());
    return DensityMatrix(rho.num_qubits(), std::move(conjugated));
}

inline StateVector bell_state() {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return StateVector(2, {inv_sqrt2, 0.0, 0.0, inv_sqrt2});
}

inline DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep list is empty");
    detail::check_targets(keep, rho.num_qubits());

    const int n = rho.num_qubits();
    std::vector<int> traced;
    for (int q = 0; q < n; ++q) {
        if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
    }
    const auto keep_offsets = detail::target_offsets(keep, n);
    const auto traced_offsets = detail::target_offsets(traced, n);

    const std::size_t out_dim = detail::dimension_of(static_cast<int>(keep.size()));
    CMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex acc = 0.0;
            for (std::size_t e = 0; e < traced_offsets.size(); ++e) {
                acc += rho.entries()(keep_offsets[r] | traced_offsets[e],
                                     keep_offsets[c] | traced_offsets[e]);
            }
            out(r, c) = acc;
        }
    }
    return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

inline DensityMatrix partial_trace(const StateVector& state, const std::vector<int>& keep) {
    return partial_trace(state.density(), keep);
}

// ---------------------------------------------------------------------------
// Measurement

struct MeasurementRecord {
    BitString outcome;      // bit j is the result for targets[j]
    double probability;     // Born probability of this outcome
    StateVector post_state; // renormalized conditional state
};

// All outcomes with nonzero Born probability, in ascending outcome order.
// Probabilities across the returned branches sum to 1.
inline std::vector<MeasurementRecord> measurement_branches(const StateVector& state,
                                                           const std::vector<int>& targets) {
    if (targets.empty()) throw std::invalid_argument("measurement: no target qubits");
    detail::check_targets(targets, state.num_qubits());

    const int k = static_cast<int>(targets.size());
    const std::size_t outcomes = detail::dimension_of(k);
    std::vector<double> probs(outcomes, 0.0);
    std::vector<std::size_t> outcome_of(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t o = 0;
        for (int j = 0; j < k; ++j) {
            o = (o << 1) | static_cast<std::size_t>(state.qubit_bit(i, targets[j]));
        }
        outcome_of[i] = o;
        probs[o] += std::norm(state.amplitude(i));
    }

    std::vector<MeasurementRecord> branches;
    for (std::size_t o = 0; o < outcomes; ++o) {
        if (probs[o] <= 1e-12) continue;
        const double inv = 1.0 / std::sqrt(probs[o]);
        CVector post(state.dim());
        for (std::size_t i = 0; i < state.dim(); ++i) {
            if (outcome_of[i] == o) post[i] = state.amplitude(i) * inv;
        }
        branches.push_back(MeasurementRecord{
            BitString::from_value(o, targets.size()), probs[o],
            StateVector(state.num_qubits(), std::move(post))});
    }
    return branches;
}

inline MeasurementRecord measure_computational(const StateVector& state,
                                               const std::vector<int>& targets,
                                               RandomSource& rng) {
    auto branches = measurement_branches(state, targets);
    const double u = rng.next_unit();
    double cumulative = 0.0;
    for (auto& branch : branches) {
        cumulative += branch.probability;
        if (u < cumulative) return std::move(branch);
    }
    return std::move(branches.back());  // u landed in the rounding gap below 1
}

// basis_id 0 measures {|0>,|1>}; basis_id 1 measures {|+>,|->} with the
// outcome labeled 0 <-> +. The post state is the physical projection, so a
// basis-1 record holds |+>/|-> on the target, not the H-rotated frame.
inline MeasurementRecord measure_in_basis(const StateVector& state, int target, int basis_id,
                                          RandomSource& rng) {
    if (basis_id == 0) return measure_computational(state, {target}, rng);
    if (basis_id != 1) throw std::invalid_argument("measure_in_basis: basis_id must be 0 or 1");

    const UnitaryOperator h = standard_gate(Gate::H);
    MeasurementRecord record = measure_computational(apply_unitary(state, h, {target}),
                                                     {target}, rng);
    record.post_state = apply_unitary(record.post_state, h, {target});
    return record;
}

// ---------------------------------------------------------------------------
// Metrics

// (1/2) sum |eigenvalues of a - b|.
inline double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    const CMatrix diff = a.entries() - b.entries();
    double sum = 0.0;
    for (double ev : hermitian_eigenvalues(diff)) sum += std::abs(ev);
    return std::clamp(0.5 * sum, 0.0, 1.0);
}

// True iff some unit-modulus c brings ||a - c b|| within tol. The optimal
// phase is <b|a> normalized to the unit circle.
inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol) {
    if (a.dim() != b.dim()) return false;
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(b.amplitude(i)) * a.amplitude(i);
    }
    const Complex phase = std::abs(overlap) > 1e-15 ? overlap / std::abs(overlap) : Complex{1.0};
    double dist2 = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        dist2 += std::norm(a.amplitude(i) - phase * b.amplitude(i));
    }
    return std::sqrt(dist2) <= tol;
}

}  // namespace qske
