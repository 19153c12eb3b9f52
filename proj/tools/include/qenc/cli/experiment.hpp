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

#include "qenc/codes.hpp"
#include "qenc/protocols.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qenc::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char *kToolVersion = "0.1.0";

enum class ErrorSweep { None, Explicit, ExhaustivePauli, RandomUnitary };

struct ErrorPlan {
    ErrorSweep sweep = ErrorSweep::None;
    /// Explicit: applied together as one error case.
    std::vector<ErrorSpec> errors;
    /// RandomUnitary: cases per trial.
    unsigned count = 0;
};

enum class ReportFormat { Json, Csv };

struct ExperimentConfig {
    Protocol protocol = Protocol::P1;
    /// Ignored for Shor, which always appends 8 qubits.
    unsigned n_appended = 2;
    /// Unset: a Haar-random logical input per trial.
    std::optional<LogicalAmplitudes> logical;
    std::uint64_t seed = 0;
    ErrorPlan errors;
    unsigned trials = 1;
    BranchKind branch = BranchKind::Both;
    /// Unset: 1e-12 without errors, 1e-10 with errors.
    std::optional<double> tolerance;
    unsigned threads = 1;
    std::string output;
    ReportFormat format = ReportFormat::Json;
};

/// Throws std::invalid_argument for parity or range violations.
void validate(const ExperimentConfig &config);

[[nodiscard]] double effective_tolerance(const ExperimentConfig &config);

/// Config fields that determine results (no output path, no thread count).
[[nodiscard]] nlohmann::ordered_json config_to_json(const ExperimentConfig &config);

/// FNV-1a 64 of the canonical config JSON, as 16 hex digits.
[[nodiscard]] std::string config_hash(const ExperimentConfig &config);

struct CorrectionRow {
    std::vector<ErrorSpec> errors;
    SyndromeResult syndrome;
    double fidelity = 0.0;
    bool pass = false;
};

struct BranchRow {
    EncodingReport encoding;
    std::vector<CorrectionRow> corrections;
};

struct TrialRow {
    unsigned index = 0;
    std::uint64_t seed = 0;
    LogicalAmplitudes logical;
    std::vector<BranchRow> branches;
    bool pass = false;
};

struct Aggregate {
    unsigned trials = 0;
    unsigned branches = 0;
    unsigned correction_cases = 0;
    unsigned correction_passes = 0;
    double min_encoding_fidelity = 1.0;
    double mean_encoding_fidelity = 1.0;
    std::optional<double> min_correction_fidelity;
    std::optional<double> mean_correction_fidelity;
    std::vector<unsigned> entangling_pulse_counts;
    std::vector<double> residual_phases;
    unsigned failed_trials = 0;
    bool pass = true;
};

struct RunReport {
    ExperimentConfig config;
    std::vector<TrialRow> trials;
    Aggregate aggregate;
};

/// Deterministic in (config, seed); trials may run on several threads.
[[nodiscard]] RunReport run(const ExperimentConfig &config);

/// Trial rows are recomputed from scratch, independent of any threading.
[[nodiscard]] TrialRow run_trial(const ExperimentConfig &config, unsigned index);

[[nodiscard]] Aggregate aggregate(const std::vector<TrialRow> &rows);

[[nodiscard]] nlohmann::ordered_json
to_json(const RunReport &report, const std::optional<std::string> &timestamp);

[[nodiscard]] std::string to_csv(const RunReport &report);

[[nodiscard]] nlohmann::ordered_json to_json(const EncodingReport &report);

/// Protocol names accepted on the command line: p1, p2, cnot, shor.
[[nodiscard]] Protocol parse_protocol(const std::string &name);

/// "re" or "re,im".
[[nodiscard]] Complex parse_complex(const std::string &text);

/// Decimal with 17 significant digits.
[[nodiscard]] std::string format_real(double value);

/// Resolves `path` against $QENC_OUTPUT_DIR when it is relative and the
/// variable is set.
[[nodiscard]] std::string resolve_output_path(const std::string &path);

} // namespace qenc::cli
