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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qenc {

using Complex = std::complex<double>;
using Qubit = unsigned;

/// Largest register the dense representation will allocate (2^24 amplitudes).
inline constexpr unsigned kMaxQubits = 24;

/// Default equality tolerance for amplitude-level comparisons.
inline constexpr double kTolerance = 1e-12;

/**
 * Dense pure state over n qubits.
 *
 * Basis index b encodes qubit j in bit j, so qubit 0 is the least
 * significant bit. Qubit 0 is the data qubit of every encoding protocol.
 */
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(unsigned n_qubits);

    /// Takes ownership of amplitudes; size must be a power of two.
    /// Amplitudes are stored as given (no renormalization).
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] unsigned n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    Complex &operator[](std::size_t index) { return amps_[index]; }
    const Complex &operator[](std::size_t index) const { return amps_[index]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// Index with every qubit in `qubits` set.
    [[nodiscard]] static std::uint64_t mask_of(std::span<const Qubit> qubits);

  private:
    StateVector(unsigned n_qubits, std::vector<Complex> amps);

    unsigned n_qubits_;
    std::vector<Complex> amps_;
};

/// The unknown single-qubit state alpha|0> + beta|1>.
struct LogicalAmplitudes {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    [[nodiscard]] bool is_normalized(double tol = kTolerance) const noexcept;
};

/// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
void require_normalized(const LogicalAmplitudes &l);

/// Basis state from a bit string; character j is the value of qubit j.
/// new_basis_state(2, "10") sets qubit 0 to 1 and qubit 1 to 0.
[[nodiscard]] StateVector new_basis_state(unsigned n_qubits,
                                          std::string_view bits);

/// (alpha|0> + beta|1>) (x) |0...0> over n_appended + 1 qubits.
[[nodiscard]] StateVector from_logical(const LogicalAmplitudes &l,
                                       unsigned n_appended);

/// |<a|b>|^2.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

/// <a|b>.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// Largest per-amplitude deviation |a_i - b_i|.
[[nodiscard]] double max_deviation(const StateVector &a, const StateVector &b);

/// Largest per-amplitude deviation after rotating b by the global phase that
/// best aligns it with a.
[[nodiscard]] double max_deviation_up_to_phase(const StateVector &a,
                                               const StateVector &b);

/// Removes a qubit known to be in a definite basis state. Throws
/// std::invalid_argument if the qubit carries weight on the other value.
[[nodiscard]] StateVector drop_qubit(const StateVector &s, Qubit qubit,
                                     int value, double tol = kTolerance);

} // namespace qenc
