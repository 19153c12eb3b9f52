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

// Brute-force reference engine: explicit Kronecker-assembled Hamiltonians
// and eigendecomposition propagators. Slow on purpose. It shares no code
// with the fast kernels in gates.hpp.

#include "qenc/state_vector.hpp"

#include <Eigen/Dense>

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qenc::oracle {

inline constexpr unsigned kMaxOracleQubits = 10;

class OracleScaleExceeded : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class DerivationFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct DenseOperator {
    unsigned n_qubits = 0;
    Eigen::MatrixXcd matrix;

    [[nodiscard]] std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix.rows());
    }
};

enum class HamiltonianKind { Jx2, Jx, ZZ };

/// Jx = 1/2 sum sigma_x over targets, Jx2 = Jx * Jx, ZZ = sigma_z sigma_z on
/// exactly two targets.
[[nodiscard]] DenseOperator build_hamiltonian(HamiltonianKind kind,
                                              std::span<const Qubit> targets,
                                              unsigned n_qubits);

/// 2x2 single-qubit operator lifted to n qubits by Kronecker products.
[[nodiscard]] DenseOperator embed_1q(const Eigen::Matrix2cd &op, Qubit qubit,
                                     unsigned n_qubits);

/// max |H - H^dagger| entry.
[[nodiscard]] double hermiticity_error(const DenseOperator &h);

/// max |U^dagger U - I| entry.
[[nodiscard]] double unitarity_error(const Eigen::MatrixXcd &u);

/// exp(-i theta H) via Hermitian eigendecomposition. Throws
/// std::invalid_argument for non-Hermitian input and std::runtime_error if
/// the propagator misses unitarity by more than 1e-12.
[[nodiscard]] Eigen::MatrixXcd propagator(const DenseOperator &h, double theta);

[[nodiscard]] StateVector dense_evolve(const StateVector &s,
                                       const DenseOperator &h, double theta);

/// Dense matrix-vector product.
[[nodiscard]] StateVector dense_apply(const StateVector &s,
                                      const Eigen::MatrixXcd &u);

enum class Derivation {
    /// Linear pulse area completing a GHZ state on three qubits.
    OddNLinearAngle,
    /// Relative phase of the pre-measurement state of protocol 2 at N = 3.
    Protocol2Phase,
    /// GHZ phases of a triplet pulse from |000> and from |111>.
    ShorTripletPhases,
};

struct RecordedConstant {
    std::string key;
    double value = 0.0;
    std::string note;
};

/// Candidate linear pulse areas, in search order.
[[nodiscard]] std::vector<double> odd_n_linear_candidates();

/// Fraction of the norm of U|0...0> on |0...0> and |1...1> for a Jx^2(pi/2)
/// pulse followed by Jx(linear_angle) on n qubits.
[[nodiscard]] double ghz_support(unsigned n_qubits, double linear_angle);

/// Runs one dense-oracle derivation. Throws DerivationFailure when the
/// search misses GHZ support 1 - 1e-10.
[[nodiscard]] std::vector<RecordedConstant> derive_constant(Derivation d);

/// All derivations, in file order.
[[nodiscard]] std::vector<RecordedConstant> derive_all();

/// "key = value" lines, values with 17 significant digits, '#' notes.
[[nodiscard]] std::string format_constants(std::span<const RecordedConstant> cs);

[[nodiscard]] std::map<std::string, double>
parse_constants(std::string_view text);

} // namespace qenc::oracle
