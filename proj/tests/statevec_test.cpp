// Copyright 2026 The qenc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qenc/gates.hpp"
#include "qenc/oracle.hpp"
#include "qenc/phase.hpp"
#include "qenc/random.hpp"
#include "qenc/state_vector.hpp"

#include <gtest/gtest.h>

#include "support/test_support.hpp"

#include <set>

using namespace qenc;
using qenc::testing::Gen;
using qenc::testing::kPi;
using qenc::testing::sparse_state;

namespace {

constexpr double kTol = 1e-12;
const double kSqrtHalf = 1.0 / std::sqrt(2.0);

std::vector<Qubit> all_qubits(unsigned n) {
    std::vector<Qubit> q(n);
    for (unsigned i = 0; i < n; ++i) {
        q[i] = i;
    }
    return q;
}

} // namespace

TEST(BasisState, single_qubit_zero) {
    StateVector s = new_basis_state(1, "0");
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], Complex(1, 0));
    EXPECT_EQ(s[1], Complex(0, 0));
}

TEST(BasisState, character_j_is_qubit_j) {
    StateVector s = new_basis_state(2, "10");
    EXPECT_EQ(s[0b01], Complex(1, 0));
    StateVector t = new_basis_state(2, "01");
    EXPECT_EQ(t[0b10], Complex(1, 0));
}

TEST(BasisState, all_ones) {
    StateVector s = new_basis_state(3, "111");
    EXPECT_EQ(s[7], Complex(1, 0));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
}

TEST(BasisState, rejects_bad_input) {
    EXPECT_THROW((void)new_basis_state(2, "012"), std::invalid_argument);
    EXPECT_THROW((void)new_basis_state(2, "0a"), std::invalid_argument);
    EXPECT_THROW((void)new_basis_state(0, ""), std::invalid_argument);
    EXPECT_THROW(StateVector(kMaxQubits + 1), std::invalid_argument);
}

TEST(FromLogical, basis_inputs) {
    StateVector zero = from_logical({1.0, 0.0}, 4);
    EXPECT_EQ(zero.n_qubits(), 5u);
    EXPECT_EQ(zero[0], Complex(1, 0));

    StateVector one = from_logical({0.0, 1.0}, 2);
    EXPECT_EQ(one[1], Complex(1, 0));
    EXPECT_NEAR(one.norm_squared(), 1.0, kTol);
}

TEST(FromLogical, superposition) {
    StateVector s = from_logical({kSqrtHalf, kSqrtHalf}, 2);
    EXPECT_NEAR(std::abs(s[0] - kSqrtHalf), 0.0, kTol);
    EXPECT_NEAR(std::abs(s[1] - kSqrtHalf), 0.0, kTol);
    for (std::size_t i = 2; i < s.size(); ++i) {
        EXPECT_EQ(s[i], Complex(0, 0));
    }
}

TEST(FromLogical, rejects_unnormalized_and_empty) {
    EXPECT_THROW((void)from_logical({1.0, 1.0}, 2), std::invalid_argument);
    EXPECT_THROW((void)from_logical({1.0, 0.0}, 0), std::invalid_argument);
}

TEST(Jx2, zero_angle_is_identity) {
    Gen gen(11);
    StateVector s = gen.state(4);
    StateVector before = s;
    std::vector<Qubit> targets{0, 2, 3};
    apply_jx2(s, 0.0, targets);
    EXPECT_LT(max_deviation(s, before), kTol);
}

TEST(Jx2, two_qubit_ghz) {
    StateVector s(2);
    std::vector<Qubit> targets{0, 1};
    apply_jx2(s, kPi / 2, targets);
    StateVector expected = qenc::testing::ghz_state(2, -kPi / 4, kPi / 4 + kPi);
    EXPECT_LT(max_deviation(s, expected), kTol);
}

TEST(Jx2, matches_dense_oracle_on_random_state) {
    Gen gen(37);
    StateVector s = gen.state(3);
    std::vector<Qubit> targets{0, 1, 2};
    StateVector expected = oracle::dense_evolve(
        s, oracle::build_hamiltonian(oracle::HamiltonianKind::Jx2, targets, 3),
        0.37);
    apply_jx2(s, 0.37, targets);
    EXPECT_LT(max_deviation(s, expected), kTol);
}

TEST(Jx2, matches_dense_oracle_for_random_subsets) {
    Gen gen(404);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + gen.below(8);
        StateVector s = gen.state(n);
        std::vector<Qubit> targets = gen.subset(n);
        const double theta = gen.angle();
        StateVector expected = oracle::dense_evolve(
            s, oracle::build_hamiltonian(oracle::HamiltonianKind::Jx2, targets, n),
            theta);
        apply_jx2(s, theta, targets);
        ASSERT_LT(max_deviation(s, expected), kTol) << "n=" << n << " trial=" << trial;
    }
}

TEST(Jx2, composition_adds_angles) {
    Gen gen(5);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned n = 1 + gen.below(7);
        std::vector<Qubit> targets = gen.subset(n);
        const double t1 = gen.angle();
        const double t2 = gen.angle();
        StateVector a = gen.state(n);
        StateVector b = a;
        apply_jx2(a, t1, targets);
        apply_jx2(a, t2, targets);
        apply_jx2(b, t1 + t2, targets);
        ASSERT_LT(max_deviation(a, b), kTol);
    }
}

TEST(Jx2, full_period_recurs_on_even_sets) {
    for (unsigned n : {2u, 4u, 6u}) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            std::vector<Complex> amps(std::size_t{1} << n);
            amps[b] = 1.0;
            StateVector s = StateVector::from_amplitudes(amps);
            StateVector before = s;
            apply_jx2(s, 2 * kPi, all_qubits(n));
            ASSERT_NEAR(fidelity(s, before), 1.0, kTol) << "n=" << n << " b=" << b;
        }
    }
}

TEST(Jx, zero_angle_is_identity) {
    Gen gen(3);
    StateVector s = gen.state(2);
    StateVector before = s;
    apply_jx(s, 0.0, all_qubits(2));
    EXPECT_LT(max_deviation(s, before), kTol);
}

TEST(Jx, half_turn_on_one_qubit) {
    StateVector s(1);
    std::vector<Qubit> targets{0};
    apply_jx(s, kPi, targets);
    EXPECT_LT(max_deviation(s, sparse_state(1, {{1, Complex(0, -1)}})), kTol);
}

TEST(Jx, full_turn_phase_follows_the_dense_oracle) {
    // exp(-i pi sigma_x) = -I per qubit: a lone qubit is negated, a pair
    // returns to itself.
    Gen gen(90);
    for (unsigned count : {1u, 2u}) {
        StateVector s = gen.state(3);
        StateVector before = s;
        std::vector<Qubit> targets(all_qubits(count));
        StateVector oracle_out = oracle::dense_evolve(
            s, oracle::build_hamiltonian(oracle::HamiltonianKind::Jx, targets, 3),
            2 * kPi);
        apply_jx(s, 2 * kPi, targets);
        EXPECT_LT(max_deviation(s, oracle_out), kTol);
        const double sign = count == 1 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            EXPECT_NEAR(std::abs(s[i] - sign * before[i]), 0.0, kTol);
        }
    }
}

TEST(CZ, truth_table) {
    StateVector s(2);
    apply_cz(s, 0, 1);
    EXPECT_LT(max_deviation(s, StateVector(2)), kTol);

    StateVector t = new_basis_state(2, "11");
    apply_cz(t, 0, 1);
    EXPECT_EQ(t[3], Complex(-1, 0));
}

TEST(CZ, linearity) {
    StateVector s = sparse_state(2, {{0b01, kSqrtHalf}, {0b11, kSqrtHalf}});
    apply_cz(s, 0, 1);
    EXPECT_LT(max_deviation(s, sparse_state(2, {{0b01, kSqrtHalf},
                                                {0b11, -kSqrtHalf}})),
              kTol);
}

TEST(Cnot, truth_table) {
    StateVector s = new_basis_state(2, "10");
    apply_cnot(s, 0, 1);
    EXPECT_EQ(s[0b11], Complex(1, 0));

    StateVector z(2);
    apply_cnot(z, 0, 1);
    EXPECT_EQ(z[0], Complex(1, 0));
}

TEST(Cnot, spreads_superposition) {
    const Complex a(0.6, 0.0);
    const Complex b(0.0, 0.8);
    StateVector s = sparse_state(2, {{0, a}, {1, b}});
    apply_cnot(s, 0, 1);
    EXPECT_LT(max_deviation(s, sparse_state(2, {{0, a}, {0b11, b}})), kTol);
}

TEST(Gate1, examples) {
    StateVector h(1);
    apply_1q(h, 0, Gate1::h());
    EXPECT_LT(max_deviation(h, sparse_state(1, {{0, kSqrtHalf}, {1, kSqrtHalf}})),
              kTol);

    StateVector one = new_basis_state(1, "1");
    apply_1q(one, 0, Gate1::rz(kPi));
    EXPECT_LT(max_deviation(one, sparse_state(1, {{1, -1.0}})), kTol);

    StateVector plus = h;
    apply_1q(plus, 0, Gate1::x());
    EXPECT_LT(max_deviation(plus, h), kTol);
}

TEST(Gate1, y_is_i_x_z) {
    Matrix2 y = matrix_of(Gate1::y());
    EXPECT_EQ(y[1], Complex(0, -1));
    EXPECT_EQ(y[2], Complex(0, 1));
}

TEST(Involutions, cz_cnot_h) {
    Gen gen(77);
    for (int trial = 0; trial < 20; ++trial) {
        const unsigned n = 2 + gen.below(5);
        const Qubit a = gen.below(n);
        Qubit b = gen.below(n);
        if (a == b) {
            b = (a + 1) % n;
        }
        StateVector s = gen.state(n);
        StateVector before = s;
        apply_cz(s, a, b);
        apply_cz(s, a, b);
        ASSERT_LT(max_deviation(s, before), kTol);
        apply_cnot(s, a, b);
        apply_cnot(s, a, b);
        ASSERT_LT(max_deviation(s, before), kTol);
        apply_1q(s, a, Gate1::h());
        apply_1q(s, a, Gate1::h());
        ASSERT_LT(max_deviation(s, before), kTol);
    }
}

TEST(Normalization, preserved_by_random_programs) {
    Gen gen(2718);
    for (int trial = 0; trial < 50; ++trial) {
        const unsigned n = 2 + gen.below(6);
        StateVector s = gen.state(n);
        for (int step = 0; step < 12; ++step) {
            const Qubit a = gen.below(n);
            const Qubit b = (a + 1 + gen.below(n - 1)) % n;
            switch (gen.below(7)) {
            case 0: apply_jx2(s, gen.angle(), gen.subset(n)); break;
            case 1: apply_jx(s, gen.angle(), gen.subset(n)); break;
            case 2: apply_zz(s, gen.angle(), a, b); break;
            case 3: apply_cz(s, a, b); break;
            case 4: apply_cnot(s, a, b); break;
            case 5: apply_1q(s, a, Gate1::rz(gen.angle())); break;
            default: (void)measure_z(s, a, gen.uniform()); break;
            }
        }
        ASSERT_NEAR(s.norm_squared(), 1.0, kTol);
    }
}

TEST(MeasureZ, deterministic_zero) {
    StateVector s(1);
    MeasurementRecord m = measure_z(s, 0, 0.999);
    EXPECT_EQ(m.outcome, 0);
    EXPECT_DOUBLE_EQ(m.probability, 1.0);
    EXPECT_LT(max_deviation(s, StateVector(1)), kTol);
}

TEST(MeasureZ, born_rule_on_plus) {
    StateVector s = sparse_state(1, {{0, kSqrtHalf}, {1, kSqrtHalf}});
    MeasurementRecord m = measure_z(s, 0, 0.3);
    EXPECT_EQ(m.outcome, 0);
    EXPECT_NEAR(m.probability, 0.5, kTol);
    EXPECT_LT(max_deviation(s, StateVector(1)), kTol);
}

TEST(MeasureZ, collapses_twisted_register_to_the_one_branch) {
    // Four qubits after one collective quarter pulse, data qubit in a
    // generic superposition.
    const LogicalAmplitudes l{0.6, Complex(0, 0.8)};
    StateVector s = from_logical(l, 3);
    apply_jx2(s, kPi / 2, all_qubits(4));
    StateVector expected = s;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        expected[i] = (i & 1) ? expected[i] * std::sqrt(2.0) : Complex(0, 0);
    }
    MeasurementRecord m = measure_z(s, 0, 0.9);
    EXPECT_EQ(m.outcome, 1);
    EXPECT_NEAR(m.probability, 0.5, kTol);
    EXPECT_LT(max_deviation(s, expected), kTol);
}

TEST(MeasureZ, probabilities_sum_to_one) {
    Gen gen(8);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned n = 1 + gen.below(6);
        StateVector s = gen.state(n);
        const Qubit q = gen.below(n);
        StateVector a = s;
        StateVector b = s;
        const double p0 = project_z(a, q, 0).probability;
        const double p1 = project_z(b, q, 1).probability;
        ASSERT_NEAR(p0 + p1, 1.0, kTol);
        ASSERT_NEAR(p1, probability_one(s, q), kTol);
        ASSERT_NEAR(a.norm_squared(), 1.0, kTol);
    }
}

TEST(MeasureZ, forcing_an_empty_branch_throws) {
    StateVector s(2);
    EXPECT_THROW((void)project_z(s, 1, 1), DegenerateBranchError);
    EXPECT_THROW((void)project_z(s, 1, 2), std::invalid_argument);
}

TEST(Fidelity, examples) {
    Gen gen(1);
    StateVector s = gen.state(3);
    EXPECT_NEAR(fidelity(s, s), 1.0, kTol);
    EXPECT_NEAR(fidelity(new_basis_state(1, "0"), new_basis_state(1, "1")), 0.0,
                kTol);
    StateVector phased = sparse_state(1, {{0, std::polar(1.0, kPi / 7)}});
    EXPECT_NEAR(fidelity(StateVector(1), phased), 1.0, kTol);
    EXPECT_LT(max_deviation_up_to_phase(StateVector(1), phased), kTol);
    EXPECT_THROW((void)fidelity(StateVector(1), StateVector(2)),
                 std::invalid_argument);
}

TEST(DropQubit, removes_a_product_factor) {
    StateVector s = sparse_state(3, {{0b010, 0.6}, {0b110, Complex(0, 0.8)}});
    StateVector rest = drop_qubit(s, 0, 0);
    EXPECT_EQ(rest.n_qubits(), 2u);
    EXPECT_LT(max_deviation(rest, sparse_state(2, {{0b01, 0.6}, {0b11, Complex(0, 0.8)}})),
              kTol);
    EXPECT_THROW((void)drop_qubit(s, 1, 0), std::invalid_argument);
}

TEST(Targets, validation) {
    StateVector s(3);
    std::vector<Qubit> out_of_range{0, 3};
    std::vector<Qubit> duplicate{1, 1};
    std::vector<Qubit> empty;
    EXPECT_THROW(apply_jx2(s, 1.0, out_of_range), std::invalid_argument);
    EXPECT_THROW(apply_jx2(s, 1.0, duplicate), std::invalid_argument);
    EXPECT_THROW(apply_jx(s, 1.0, empty), std::invalid_argument);
    EXPECT_THROW(apply_cz(s, 2, 2), std::invalid_argument);
    EXPECT_THROW(apply_cnot(s, 0, 5), std::invalid_argument);
    EXPECT_THROW(apply_jx2(s, std::nan(""), duplicate), std::invalid_argument);
}

TEST(Pulse, dispatch_matches_kernels) {
    Gen gen(12);
    StateVector a = gen.state(3);
    StateVector b = a;
    apply_pulse(a, {PulseKind::Jx2, 0.7, {0, 2}});
    apply_pulse(a, {PulseKind::Rz, 0.3, {1, 2}});
    apply_pulse(a, {PulseKind::CNOT, 0.0, {2, 0}});
    std::vector<Qubit> t{0, 2};
    apply_jx2(b, 0.7, t);
    apply_1q(b, 1, Gate1::rz(0.3));
    apply_1q(b, 2, Gate1::rz(0.3));
    apply_cnot(b, 2, 0);
    EXPECT_LT(max_deviation(a, b), kTol);
    EXPECT_THROW(apply_pulse(a, {PulseKind::MeasureZ, 0.0, {0}}),
                 std::invalid_argument);
}

TEST(Pulse, names_round_trip) {
    for (PulseKind k : {PulseKind::Jx2, PulseKind::Jx, PulseKind::CZ,
                        PulseKind::CNOT, PulseKind::H, PulseKind::X, PulseKind::Z,
                        PulseKind::Rz, PulseKind::MeasureZ,
                        PulseKind::PauliStringParity}) {
        EXPECT_EQ(pulse_kind_from_string(to_string(k)), k);
    }
    EXPECT_THROW((void)pulse_kind_from_string("swap"), std::invalid_argument);
}

TEST(Rng, counter_based_and_seed_sensitive) {
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(a(), b());
    }
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seeds.insert(trial_seed(7, i));
    }
    EXPECT_EQ(seeds.size(), 1000u);
    EXPECT_NE(trial_seed(7, 0), trial_seed(8, 0));
}

TEST(Rng, uniform_range_and_logical_norm) {
    Rng r(99);
    for (int i = 0; i < 1000; ++i) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    for (int i = 0; i < 100; ++i) {
        ASSERT_TRUE(r.logical().is_normalized());
        auto v = r.unit_vector();
        ASSERT_NEAR(v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 1.0, kTol);
    }
}

TEST(WrapPhase, lands_in_half_open_interval) {
    EXPECT_DOUBLE_EQ(wrap_phase(kPi), kPi);
    EXPECT_DOUBLE_EQ(wrap_phase(-kPi), kPi);
    EXPECT_NEAR(wrap_phase(kPi / 4 + 4 * kPi), kPi / 4, kTol);
    Gen gen(6);
    for (int i = 0; i < 1000; ++i) {
        const double w = wrap_phase(gen.angle(100.0));
        ASSERT_GT(w, -kPi);
        ASSERT_LE(w, kPi);
    }
    EXPECT_NEAR(phase_distance(kPi - 1e-3, -kPi + 1e-3), 2e-3, kTol);
}
