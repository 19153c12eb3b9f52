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

#include "qenc/gates.hpp"
#include "qenc/random.hpp"
#include "qenc/state_vector.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qenc {

enum class ErrorKind { X, Y, Z, Unitary };

/// Single-qubit error. Unitary applies exp(-i theta/2 (axis . sigma)).
struct ErrorSpec {
    Qubit qubit = 0;
    ErrorKind kind = ErrorKind::X;
    double theta = 0.0;
    std::array<double, 3> axis{1.0, 0.0, 0.0};

    static ErrorSpec pauli(Qubit q, ErrorKind k) { return {q, k}; }
    static ErrorSpec unitary(Qubit q, double theta, std::array<double, 3> axis) {
        return {q, ErrorKind::Unitary, theta, axis};
    }
};

[[nodiscard]] std::string to_string(const ErrorSpec &e);

/// Parses "X:3", "Y:0", "Z:8" or "U:<qubit>:<theta>:<ax>:<ay>:<az>".
[[nodiscard]] ErrorSpec parse_error_spec(std::string_view text);

[[nodiscard]] Matrix2 error_matrix(const ErrorSpec &e);

/// Throws std::invalid_argument for a non-unit axis or bad qubit.
void apply_error(StateVector &s, const ErrorSpec &e);

/// Per-qubit Pauli letters; letter j acts on qubit j.
class PauliString {
  public:
    PauliString() = default;
    /// "IXZY..." style; every character must be one of I, X, Y, Z.
    explicit PauliString(std::string_view letters);

    /// Identity on n qubits except `letter` on each of `qubits`.
    static PauliString on(unsigned n_qubits, std::span<const Qubit> qubits,
                          char letter);

    [[nodiscard]] unsigned size() const noexcept {
        return static_cast<unsigned>(letters_.size());
    }
    [[nodiscard]] char operator[](Qubit q) const { return letters_[q]; }
    [[nodiscard]] const std::string &str() const noexcept { return letters_; }
    [[nodiscard]] unsigned weight() const noexcept;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::string letters_;
};

/// s <- P s.
void apply_pauli_string(StateVector &s, const PauliString &p);

struct ParityOutcome {
    int eigenvalue = 1;
    double probability = 1.0;
};

/// Born-rule projection onto an eigenspace of the Pauli string; the +1 branch
/// is chosen iff sample < P(+1).
ParityOutcome measure_pauli_parity(StateVector &s, const PauliString &p,
                                   double sample);

/// Post-selects the given eigenvalue. Throws DegenerateBranchError when its
/// probability is below kDegenerateBranchProbability.
ParityOutcome project_pauli_parity(StateVector &s, const PauliString &p,
                                   int eigenvalue);

struct ParityRecord {
    PauliString stabilizer;
    int eigenvalue = 1;
    double probability = 1.0;
};

struct Correction {
    Qubit qubit = 0;
    char pauli = 'X';

    friend bool operator==(const Correction &, const Correction &) = default;
};

struct SyndromeResult {
    std::vector<ParityRecord> parities;
    std::vector<Correction> corrections;

    [[nodiscard]] bool trivial() const noexcept;
};

/// Z_i Z_{i+1} syndrome along `block`, minority-side X correction.
SyndromeResult repetition_correct(StateVector &s, std::span<const Qubit> block,
                                  Rng &rng);

/// X_i X_{i+1} syndrome along `block`, minority-side Z correction.
SyndromeResult phase_repetition_correct(StateVector &s,
                                        std::span<const Qubit> block, Rng &rng);

/// Z-parity pairs inside each triplet followed by the two X^6 checks.
[[nodiscard]] const std::vector<PauliString> &shor_stabilizers();

/// Measures the eight Shor stabilizers and applies the Pauli correction.
SyndromeResult shor_correct(StateVector &s, Rng &rng);

enum class CodeKind { Repetition, PhaseRepetition, Shor };

struct Code {
    CodeKind kind = CodeKind::Repetition;
    unsigned n_qubits = 3;

    static Code repetition(unsigned n) { return {CodeKind::Repetition, n}; }
    static Code phase_repetition(unsigned n) {
        return {CodeKind::PhaseRepetition, n};
    }
    static Code shor() { return {CodeKind::Shor, 9}; }
};

[[nodiscard]] StateVector codeword(const Code &code, const LogicalAmplitudes &l);

/// |<codeword(l)|s>|^2.
[[nodiscard]] double logical_fidelity(const StateVector &s,
                                      const LogicalAmplitudes &l,
                                      const Code &code);

} // namespace qenc
