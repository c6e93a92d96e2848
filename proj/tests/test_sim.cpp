#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qske/qske.hpp"

using namespace qske;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

StateVector random_state(int num_qubits, RandomSource& rng) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    while (true) {
        CVector amps(dim);
        double norm2 = 0.0;
        for (auto& a : amps) {
            a = Complex(2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0);
            norm2 += std::norm(a);
        }
        if (norm2 < 1e-12) continue;
        const double inv = 1.0 / std::sqrt(norm2);
        for (auto& a : amps) a *= inv;
        return StateVector(num_qubits, std::move(amps));
    }
}

DensityMatrix random_density(int num_qubits, RandomSource& rng) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    CMatrix sum(dim, dim);
    double weights[3] = {rng.next_unit() + 1e-3, rng.next_unit() + 1e-3,
                         rng.next_unit() + 1e-3};
    const double total = weights[0] + weights[1] + weights[2];
    for (double w : weights) {
        sum = sum + Complex{w / total} * DensityMatrix::pure(random_state(num_qubits, rng)).entries();
    }
    return DensityMatrix(num_qubits, std::move(sum));
}

}  // namespace

TEST_CASE("state vector constructors enforce the register contract") {
    CHECK_NOTHROW(StateVector(1, {1.0, 0.0}));
    CHECK_THROWS_AS(StateVector(1, {1.0, 1.0}), std::invalid_argument);          // unnormalized
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0}), std::invalid_argument);          // wrong size
    CHECK_THROWS_AS(StateVector(11, CVector(2048, 0.0)), std::invalid_argument); // register cap
    CHECK_THROWS_AS(StateVector(1, {std::nan(""), 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::basis(1, 2), std::invalid_argument);

    const StateVector s = StateVector::basis(2, 1);
    CHECK(s.amplitude(1) == Complex{1.0});
    CHECK(s.qubit_bit(1, 0) == 0);  // qubit 0 is the most significant bit
    CHECK(s.qubit_bit(1, 1) == 1);
}

TEST_CASE("density matrix constructors reject non-states") {
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
    CHECK(std::abs(mixed.entries()(0, 0) - Complex{0.5}) < 1e-15);

    CHECK_THROWS_AS(DensityMatrix(1, CMatrix(2, 2, {1.0, 0.0, 0.0, 1.0})),
                    std::invalid_argument);  // trace 2
    CHECK_THROWS_AS(DensityMatrix(1, CMatrix(2, 2, {0.5, Complex(0, 0.5), 0.0, 0.5})),
                    std::invalid_argument);  // not Hermitian
    // Hermitian, trace 1, but indefinite.
    CHECK_THROWS_AS(DensityMatrix(1, CMatrix(2, 2, {1.5, 0.0, 0.0, -0.5})),
                    std::invalid_argument);
}

TEST_CASE("unitary constructor checks U times U-dagger") {
    CHECK_NOTHROW(UnitaryOperator(1, CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0})));
    CHECK_THROWS_AS(UnitaryOperator(1, CMatrix(2, 2, {1.0, 0.0, 0.0, 2.0})),
                    std::invalid_argument);
}

TEST_CASE("standard gates have the textbook matrices") {
    const UnitaryOperator y = standard_gate(Gate::Y);
    CHECK(y.entries()(0, 1) == Complex(0, -1));
    CHECK(y.entries()(1, 0) == Complex(0, 1));

    const UnitaryOperator h = standard_gate("H");
    CHECK(std::abs(h.entries()(1, 1) - Complex{-kInvSqrt2}) < 1e-15);

    const UnitaryOperator cnot = standard_gate("CNOT");
    CHECK(cnot.entries()(2, 3) == Complex{1.0});
    CHECK(cnot.entries()(3, 2) == Complex{1.0});
    CHECK_THROWS_AS(standard_gate("T"), std::invalid_argument);
}

TEST_CASE("tensor composes registers in order") {
    const StateVector zero_one = tensor(StateVector::basis(1, 0), StateVector::basis(1, 1));
    CHECK(zero_one.amplitude(1) == Complex{1.0});

    const UnitaryOperator ii = tensor(standard_gate(Gate::Z), standard_gate(Gate::Z));
    CHECK(ii.dim() == 4);
    CHECK(ii.entries()(3, 3) == Complex{1.0});

    const StateVector pre = tensor(bell_state(), StateVector::basis(1, 1));
    CHECK(std::abs(pre.amplitude(1) - Complex{kInvSqrt2}) < 1e-12);
    CHECK(std::abs(pre.amplitude(7) - Complex{kInvSqrt2}) < 1e-12);
}

TEST_CASE("apply_unitary on chosen targets") {
    const StateVector one = apply_unitary(StateVector::basis(1, 0), standard_gate(Gate::X), {0});
    CHECK(one.amplitude(1) == Complex{1.0});

    StateVector s = StateVector::basis(1, 0);
    s = apply_unitary(s, standard_gate(Gate::H), {0});
    s = apply_unitary(s, standard_gate(Gate::H), {0});
    CHECK(equal_up_to_global_phase(s, StateVector::basis(1, 0), 1e-9));

    // CNOT with control qubit 0 and target qubit 2 on bell x |1>.
    const StateVector pre = tensor(bell_state(), StateVector::basis(1, 1));
    const StateVector post = apply_unitary(pre, standard_gate(Gate::CNOT), {0, 2});
    CHECK(std::abs(post.amplitude(1) - Complex{kInvSqrt2}) < 1e-12);
    CHECK(std::abs(post.amplitude(6) - Complex{kInvSqrt2}) < 1e-12);

    CHECK_THROWS_AS(apply_unitary(pre, standard_gate(Gate::CNOT), {0, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(pre, standard_gate(Gate::CNOT), {0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(apply_unitary(pre, standard_gate(Gate::X), {3}), std::invalid_argument);
}

TEST_CASE("bell state and the disentangling circuit") {
    const StateVector bell = bell_state();
    CHECK(std::abs(bell.amplitude(0) - Complex{kInvSqrt2}) < 1e-15);
    CHECK(bell.amplitude(1) == Complex{0.0});
    CHECK(bell.amplitude(2) == Complex{0.0});
    CHECK(std::abs(bell.amplitude(3) - Complex{kInvSqrt2}) < 1e-15);

    StateVector s = apply_unitary(bell, standard_gate(Gate::CNOT), {0, 1});
    s = apply_unitary(s, standard_gate(Gate::H), {0});
    CHECK(equal_up_to_global_phase(s, StateVector::basis(2, 0), 1e-9));
}

TEST_CASE("partial trace") {
    RandomSource rng(11);
    const DensityMatrix a = random_density(1, rng);
    const DensityMatrix b = random_density(1, rng);
    CHECK(trace_distance(partial_trace(tensor(a, b), {0}), a) < 1e-10);
    CHECK(trace_distance(partial_trace(tensor(a, b), {1}), b) < 1e-10);

    CHECK(trace_distance(partial_trace(bell_state().density(), {1}),
                         DensityMatrix::maximally_mixed(1)) < 1e-12);

    CHECK_THROWS_AS(partial_trace(a, std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(a, {1}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(tensor(a, b), {0, 0}), std::invalid_argument);
}

TEST_CASE("measurement on basis states and Bell collapse") {
    RandomSource rng(5);
    const MeasurementRecord one = measure_computational(StateVector::basis(1, 1), {0}, rng);
    CHECK(one.outcome.bit(0) == 1);
    CHECK(one.probability == Catch::Approx(1.0).margin(1e-12));

    const auto branches = measurement_branches(bell_state(), {0});
    REQUIRE(branches.size() == 2);
    CHECK(branches[0].probability == Catch::Approx(0.5).margin(1e-12));
    CHECK(equal_up_to_global_phase(branches[0].post_state, StateVector::basis(2, 0), 1e-9));
    CHECK(equal_up_to_global_phase(branches[1].post_state, StateVector::basis(2, 3), 1e-9));

    CHECK_THROWS_AS(measurement_branches(bell_state(), {}), std::invalid_argument);
}

TEST_CASE("parity-superposition measurement is uniform over the shares") {
    // Uniform superposition over the 4 strings of 3 bits with parity 1.
    StateVector reg = StateVector::basis(3, 1);
    for (int i = 0; i < 2; ++i) reg = apply_unitary(reg, standard_gate(Gate::H), {i});
    for (int i = 0; i < 2; ++i) reg = apply_unitary(reg, standard_gate(Gate::CNOT), {i, 2});

    const auto branches = measurement_branches(reg, {0, 1, 2});
    REQUIRE(branches.size() == 4);
    for (const auto& b : branches) {
        CHECK(b.probability == Catch::Approx(0.25).margin(1e-12));
        CHECK(b.outcome.parity() == 1);
    }
}

TEST_CASE("measure_in_basis handles the +/- basis and rejects others") {
    const StateVector plus = apply_unitary(StateVector::basis(1, 0), standard_gate(Gate::H), {0});

    RandomSource rng(3);
    const MeasurementRecord rec = measure_in_basis(plus, 0, 1, rng);
    CHECK(rec.outcome.bit(0) == 0);
    CHECK(rec.probability == Catch::Approx(1.0).margin(1e-9));
    CHECK(equal_up_to_global_phase(rec.post_state, plus, 1e-9));

    // Computational measurement of |+> is a fair coin.
    int ones = 0;
    for (int i = 0; i < 200; ++i) {
        RandomSource r2(static_cast<std::uint64_t>(i) + 1000);
        ones += measure_in_basis(plus, 0, 0, r2).outcome.bit(0);
    }
    CHECK(ones > 60);
    CHECK(ones < 140);

    RandomSource r3(9);
    CHECK_THROWS_AS(measure_in_basis(plus, 0, 2, r3), std::invalid_argument);

    // basis_id 0 agrees exactly with measure_computational on the same stream.
    const StateVector probe = random_state(2, r3);
    RandomSource ra(77), rb(77);
    const MeasurementRecord a = measure_in_basis(probe, 1, 0, ra);
    const MeasurementRecord b = measure_computational(probe, {1}, rb);
    CHECK(a.outcome == b.outcome);
    CHECK(a.probability == b.probability);
}

TEST_CASE("trace distance on the named examples") {
    const DensityMatrix zero = DensityMatrix::pure(StateVector::basis(1, 0));
    const DensityMatrix one = DensityMatrix::pure(StateVector::basis(1, 1));
    CHECK(trace_distance(zero, zero) == Catch::Approx(0.0).margin(1e-12));
    CHECK(trace_distance(zero, one) == Catch::Approx(1.0).margin(1e-12));
    CHECK(trace_distance(zero, DensityMatrix::maximally_mixed(1)) ==
          Catch::Approx(0.5).margin(1e-12));
    CHECK_THROWS_AS(trace_distance(zero, DensityMatrix::maximally_mixed(2)),
                    std::invalid_argument);
}

TEST_CASE("equality up to global phase") {
    const StateVector zero = StateVector::basis(1, 0);
    CHECK(equal_up_to_global_phase(zero, StateVector(1, {-1.0, 0.0}), 1e-9));
    CHECK(equal_up_to_global_phase(zero, StateVector(1, {Complex(0, 1), 0.0}), 1e-9));
    CHECK_FALSE(equal_up_to_global_phase(zero, StateVector::basis(1, 1), 1e-9));
    CHECK_FALSE(equal_up_to_global_phase(zero, bell_state(), 1e-9));

    // Y H |1> equals -|+> up to a global phase (here the phase is -i).
    StateVector s = StateVector::basis(1, 1);
    s = apply_unitary(s, standard_gate(Gate::H), {0});
    s = apply_unitary(s, standard_gate(Gate::Y), {0});
    CHECK(std::abs(s.amplitude(0) - Complex(0, kInvSqrt2)) < 1e-12);
    CHECK(std::abs(s.amplitude(1) - Complex(0, kInvSqrt2)) < 1e-12);
    CHECK(equal_up_to_global_phase(s, StateVector(1, {-kInvSqrt2, -kInvSqrt2}), 1e-9));
}

TEST_CASE("randomized simulator invariants") {
    RandomSource rng(2024);
    const UnitaryOperator gates1[] = {standard_gate(Gate::X), standard_gate(Gate::Y),
                                      standard_gate(Gate::Z), standard_gate(Gate::H)};

    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng.next_below(3));
        const StateVector s = random_state(n, rng);

        // Unitaries preserve the norm.
        const int target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const UnitaryOperator& g = gates1[rng.next_below(4)];
        const StateVector moved = apply_unitary(s, g, {target});
        double norm2 = 0.0;
        for (std::size_t j = 0; j < moved.dim(); ++j) norm2 += std::norm(moved.amplitude(j));
        CHECK(std::abs(norm2 - 1.0) < 1e-9);

        // Conjugation round-trips density matrices.
        const DensityMatrix rho = random_density(n, rng);
        const DensityMatrix back =
            apply_unitary(apply_unitary(rho, g, {target}), g.dagger(), {target});
        CHECK(trace_distance(back, rho) < 1e-9);

        // Branch probabilities sum to 1.
        const auto branches = measurement_branches(s, {target});
        double total = 0.0;
        for (const auto& b : branches) total += b.probability;
        CHECK(std::abs(total - 1.0) < 1e-9);

        // Triangle inequality.
        const DensityMatrix r1 = random_density(1, rng);
        const DensityMatrix r2 = random_density(1, rng);
        const DensityMatrix r3 = random_density(1, rng);
        CHECK(trace_distance(r1, r3) <=
              trace_distance(r1, r2) + trace_distance(r2, r3) + 1e-9);
    }
}

TEST_CASE("deterministic random source") {
    RandomSource a(42), b(42);
    for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
    CHECK(a.algorithm_id() == "mt19937_64");
    CHECK(a.seed() == 42);

    RandomSource c0 = a.derive(0), c1 = a.derive(1);
    CHECK(c0.next_u64() != c1.next_u64());

    RandomSource u(7);
    for (int i = 0; i < 1000; ++i) {
        const double x = u.next_unit();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        const std::uint64_t v = u.next_below(6);
        CHECK(v < 6);
    }
    CHECK_THROWS_AS(u.next_below(0), std::invalid_argument);
}
