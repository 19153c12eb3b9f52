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

#pragma once

#include "qenc/state_vector.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qenc {

/// Raised when a forced measurement branch has (numerically) zero weight.
class DegenerateBranchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Branch probability below which a forced projection is refused.
inline constexpr double kDegenerateBranchProbability = 1e-15;

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<Complex, 4>;

enum class Gate1Kind { H, X, Y, Z, Rz };

/// Single-qubit gate. Rz(phi) multiplies the |1> component by e^{i phi}.
struct Gate1 {
    Gate1Kind kind;
    double phi = 0.0;

    static constexpr Gate1 h() { return {Gate1Kind::H}; }
    static constexpr Gate1 x() { return {Gate1Kind::X}; }
    static constexpr Gate1 y() { return {Gate1Kind::Y}; }
    static constexpr Gate1 z() { return {Gate1Kind::Z}; }
    static constexpr Gate1 rz(double phi) { return {Gate1Kind::Rz, phi}; }
};

[[nodiscard]] Matrix2 matrix_of(Gate1 gate);

/**
 * exp(-i theta Jx^2) with Jx = 1/2 sum_{j in targets} sigma_x^(j).
 *
 * Hadamards on the targets rotate Jx onto Jz, where the propagator is
 * diagonal: exp(-i theta m^2) with m = (k - 2 popcount(b & targets)) / 2.
 */
void apply_jx2(StateVector &s, double theta, std::span<const Qubit> targets);

/// exp(-i theta Jx), i.e. exp(-i theta/2 sigma_x) on each target.
void apply_jx(StateVector &s, double theta, std::span<const Qubit> targets);

/// exp(-i theta sigma_z^(q1) sigma_z^(q2)).
void apply_zz(StateVector &s, double theta, Qubit q1, Qubit q2);

/// Controlled phase: negates amplitudes with both bits set.
void apply_cz(StateVector &s, Qubit q1, Qubit q2);

void apply_cnot(StateVector &s, Qubit control, Qubit target);

void apply_1q(StateVector &s, Qubit qubit, Gate1 gate);

void apply_matrix_1q(StateVector &s, Qubit qubit, const Matrix2 &m);

/// Probability that `qubit` reads 1.
[[nodiscard]] double probability_one(const StateVector &s, Qubit qubit);

struct MeasurementRecord {
    Qubit qubit = 0;
    int outcome = 0;
    /// Born probability of the realized outcome before collapse.
    double probability = 0.0;
};

/// Z-basis measurement: outcome 0 iff sample < P(0). Collapses and
/// renormalizes `s`.
MeasurementRecord measure_z(StateVector &s, Qubit qubit, double sample);

/// Post-selects `outcome`. Throws DegenerateBranchError when the branch
/// probability is below kDegenerateBranchProbability.
MeasurementRecord project_z(StateVector &s, Qubit qubit, int outcome);

enum class PulseKind {
    Jx2,
    Jx,
    CZ,
    CNOT,
    H,
    X,
    Z,
    Rz,
    MeasureZ,
    PauliStringParity,
};

[[nodiscard]] std::string to_string(PulseKind kind);
[[nodiscard]] PulseKind pulse_kind_from_string(const std::string &name);

/**
 * One control step. theta is the pulse area u*t (hbar = 1) for Jx2/Jx and
 * the phase for Rz. Single-qubit kinds with several targets act on each
 * target simultaneously. CZ takes {q1, q2}, CNOT takes {control, target}.
 */
struct PulseSpec {
    PulseKind kind = PulseKind::H;
    double theta = 0.0;
    std::vector<Qubit> targets;

    /// Jx2, CZ and CNOT: the two-body operations a protocol pays for.
    [[nodiscard]] bool is_entangling() const noexcept;
    [[nodiscard]] bool is_measurement() const noexcept;

    friend bool operator==(const PulseSpec &, const PulseSpec &) = default;
};

/// Applies a unitary pulse. Throws std::invalid_argument for measurement
/// kinds, which need an outcome source.
void apply_pulse(StateVector &s, const PulseSpec &pulse);

/// Throws std::invalid_argument unless targets are distinct, non-empty and
/// inside the register.
void validate_targets(const StateVector &s, std::span<const Qubit> targets);

} // namespace qenc
