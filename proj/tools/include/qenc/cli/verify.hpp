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

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qenc::cli {

enum class VerifyScope { Kernels, Phases, Constants };

[[nodiscard]] VerifyScope parse_scope(const std::string &name);

struct Check {
    std::string name;
    /// What the measured value is compared against.
    std::string reference;
    double expected = 0.0;
    double measured = 0.0;
    double deviation = 0.0;
    double tolerance = 0.0;
    /// Recorded only; never fails the run.
    bool adjudication = false;
    bool pass = true;
};

struct VerifyReport {
    VerifyScope scope = VerifyScope::Kernels;
    std::vector<Check> checks;
    [[nodiscard]] bool pass() const;
};

/// 100 random (kind, angle, state) triples on 1..8 qubits, fast kernels
/// against the dense oracle.
[[nodiscard]] VerifyReport verify_kernels(unsigned cases = 100,
                                          unsigned long long seed = 2024);

/// GHZ phases, protocol residual phases, and the two recorded adjudications.
[[nodiscard]] VerifyReport verify_phases();

/// Re-derives the oracle constants and diffs them against `constants_file`
/// and the values compiled into the library.
[[nodiscard]] VerifyReport verify_constants(const std::string &constants_file);

[[nodiscard]] VerifyReport verify(VerifyScope scope,
                                  const std::string &constants_file);

void print_table(std::ostream &out, const VerifyReport &report);

[[nodiscard]] nlohmann::ordered_json
to_json(const VerifyReport &report, const std::optional<std::string> &timestamp);

} // namespace qenc::cli
