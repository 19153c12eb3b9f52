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
#include "qenc/state_vector.hpp"

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qenc {

/// A pulse sequence produced something other than its defining state.
class ProtocolFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Protocol { P1, P2, CnotBaseline, Shor };

[[nodiscard]] std::string to_string(Protocol p);

/// Coefficient phases of |0...0> and |1...1> in a two-component GHZ state.
struct GhzPhasePair {
    double phase0 = 0.0;
    double phase1 = 0.0;
};

struct EncodingReport {
    Protocol protocol = Protocol::P1;
    unsigned n_appended = 0;
    std::vector<PulseSpec> pulses;
    unsigned entangling_pulse_count = 0;
    std::optional<MeasurementRecord> measurement;
    /// Known relative phase left on the |1...1> word before fix-up.
    double residual_phase = 0.0;
    /// Same phase read back from the simulated amplitudes, when both logical
    /// amplitudes are large enough to define it.
    std::optional<double> measured_residual_phase;
    double fidelity_to_target = 0.0;
    /// Qubits carrying the logical state after the protocol.
    std::vector<Qubit> logical_block;
    /// Phases of every GHZ pulse issued (Shor: one per triplet).
    std::vector<GhzPhasePair> ghz_phases;
};

[[nodiscard]] unsigned count_entangling_pulses(std::span<const PulseSpec> pulses);

/// Called after each named protocol step with the current state.
using StepObserver = std::function<void(std::string_view, const StateVector &)>;

struct Encoded {
    StateVector state;
    EncodingReport report;
};

// --- GHZ pulse ---------------------------------------------------------

enum class GhzMode {
    /// Targets must be a |0...0> or |1...1> tensor factor; phases are read
    /// back and leakage is checked.
    Extract,
    /// Apply the pulses only.
    Raw,
};

struct GhzPulseResult {
    std::vector<PulseSpec> pulses;
    std::optional<GhzPhasePair> phases;
};

/// Total GHZ-support deficit above which ghz_pulse reports a failure.
inline constexpr double kGhzLeakageTolerance = 1e-10;

/**
 * One collective Jx^2 pulse of area pi/2 on `targets`. Odd target sets get a
 * trailing linear Jx pulse of area odd_n_linear_angle() so the output stays
 * inside span{|0...0>, |1...1>}.
 */
GhzPulseResult ghz_pulse(StateVector &s, std::span<const Qubit> targets,
                         GhzMode mode = GhzMode::Extract);

/// Linear pulse area used after the Jx^2 pulse on odd-size sets.
[[nodiscard]] double odd_n_linear_angle() noexcept;

/// Closed-form GHZ phases for an even set of n qubits starting in |0...0>
/// (pattern 0) or |1...1> (pattern 1):
/// pattern 0 -> (-pi/4, pi/4 + n pi/2), pattern 1 -> (pi/4 + n pi/2, -pi/4).
[[nodiscard]] GhzPhasePair ghz_phases_closed_form(unsigned n, int pattern);

// --- Protocol 1: Jx^2, CZ, Jx^2 ----------------------------------------

struct Protocol1Options {
    /// Appended qubit paired with the data qubit in the CZ step.
    Qubit cz_partner = 1;
    bool fix_phase = true;
    /// Extra phase folded into the single Rz fix-up on qubit 0.
    double extra_fixup_phase = 0.0;
    StepObserver observer;
};

/// arg(-i (-1)^{N/2}) for even N.
[[nodiscard]] double protocol1_residual_phase(unsigned n_appended);

/// Requires even n_appended >= 2.
[[nodiscard]] Encoded encode_protocol1(const LogicalAmplitudes &l,
                                       unsigned n_appended,
                                       const Protocol1Options &options = {});

// --- Protocol 2: Jx^2, measurement, correction ------------------------

enum class BranchKind { Sampled, Forced0, Forced1, Both };

struct BranchMode {
    BranchKind kind = BranchKind::Both;
    double sample = 0.0;

    static BranchMode sampled(double u) { return {BranchKind::Sampled, u}; }
    static BranchMode forced0() { return {BranchKind::Forced0}; }
    static BranchMode forced1() { return {BranchKind::Forced1}; }
    static BranchMode both() { return {BranchKind::Both}; }
};

enum class OutcomeOneCorrection {
    /// X on every appended qubit.
    FlipAll,
    /// Jx^2 pulse of area pi on the appended qubits.
    Jx2Pulse,
};

struct Protocol2Options {
    BranchMode branch = BranchMode::both();
    OutcomeOneCorrection correction = OutcomeOneCorrection::FlipAll;
    bool fix_phase = true;
    StepObserver observer;
};

struct Protocol2Branch {
    int outcome = 0;
    double probability = 0.0;
    /// N+1 qubit state; qubit 0 holds the measured value.
    StateVector full_state;
    /// The N appended qubits with qubit 0 removed.
    StateVector logical;
    EncodingReport report;
};

struct Protocol2Result {
    /// State right after the collective pulse, before measurement.
    StateVector pre_measurement;
    std::vector<Protocol2Branch> branches;
};

/// Relative phase between the |1...1> and |0...0> words of either
/// measurement branch, from the GHZ phases of the N+1 qubit pulse.
[[nodiscard]] double protocol2_relative_phase(unsigned n_appended);

/// The phase (N+1) pi / 2 quoted for the same quantity, wrapped.
[[nodiscard]] double protocol2_quoted_phase(unsigned n_appended);

/// Requires odd n_appended >= 3.
[[nodiscard]] Protocol2Result encode_protocol2(const LogicalAmplitudes &l,
                                               unsigned n_appended,
                                               const Protocol2Options &options = {});

// --- Baseline, Shor, phase basis ---------------------------------------

/// CNOT(0 -> j) for j = 1..N.
[[nodiscard]] Encoded encode_cnot_baseline(const LogicalAmplitudes &l,
                                           unsigned n_appended);

struct ShorOptions {
    /// Build the 9-qubit repetition state with CNOTs instead of protocol 1.
    bool use_cnot_baseline = false;
    bool fix_phase = true;
    StepObserver observer;
};

/// Relative (gamma0, gamma1) phases of the |111> word in each triplet after
/// its GHZ pulse, for triplets starting in |000> and |111>.
[[nodiscard]] std::pair<double, double> shor_triplet_gammas() noexcept;

/// Relative phase between the two logical words introduced by the three
/// triplet pulses. Cancelled up front by the repetition-stage fix-up.
[[nodiscard]] double shor_logical_phase() noexcept;

[[nodiscard]] Encoded shor_encode(const LogicalAmplitudes &l,
                                  const ShorOptions &options = {});

/// Hadamard on every qubit.
PulseSpec to_phase_basis(StateVector &s);

} // namespace qenc
