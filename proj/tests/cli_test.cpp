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

#include "qenc/cli/experiment.hpp"
#include "qenc/cli/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace qenc;
using namespace qenc::cli;

namespace {

ExperimentConfig p1_config() {
    ExperimentConfig c;
    c.protocol = Protocol::P1;
    c.n_appended = 4;
    c.seed = 7;
    c.trials = 20;
    return c;
}

std::string dump(const RunReport &r) { return to_json(r, std::nullopt).dump(2); }

} // namespace

TEST(Run, protocol1_acceptance_example) {
    RunReport r = run(p1_config());
    ASSERT_EQ(r.trials.size(), 20u);
    EXPECT_TRUE(r.aggregate.pass);
    EXPECT_GE(r.aggregate.min_encoding_fidelity, 1.0 - 1e-12);
    EXPECT_EQ(r.aggregate.entangling_pulse_counts, std::vector<unsigned>{3});
}

TEST(Run, shor_exhaustive_pauli_corrects_all_27) {
    ExperimentConfig c;
    c.protocol = Protocol::Shor;
    c.n_appended = 8;
    c.errors.sweep = ErrorSweep::ExhaustivePauli;
    RunReport r = run(c);
    EXPECT_EQ(r.aggregate.correction_cases, 27u);
    EXPECT_EQ(r.aggregate.correction_passes, 27u);
    EXPECT_TRUE(r.aggregate.pass);
}

TEST(Run, cnot_pulse_count) {
    ExperimentConfig c;
    c.protocol = Protocol::CnotBaseline;
    c.n_appended = 8;
    RunReport r = run(c);
    EXPECT_EQ(r.aggregate.entangling_pulse_counts, std::vector<unsigned>{8});
    EXPECT_EQ(to_json(r, std::nullopt)["trials"][0]["branches"][0]["encoding"]
                     ["entangling_pulse_count"],
              8);
}

TEST(Run, protocol2_both_branches_with_errors) {
    ExperimentConfig c;
    c.protocol = Protocol::P2;
    c.n_appended = 5;
    c.trials = 3;
    c.seed = 99;
    c.errors.sweep = ErrorSweep::ExhaustivePauli;
    RunReport r = run(c);
    EXPECT_EQ(r.aggregate.branches, 6u);
    EXPECT_EQ(r.aggregate.correction_cases, 30u);
    EXPECT_TRUE(r.aggregate.pass);
}

TEST(Run, random_unitary_sweep_on_shor) {
    ExperimentConfig c;
    c.protocol = Protocol::Shor;
    c.n_appended = 8;
    c.seed = 3;
    c.errors.sweep = ErrorSweep::RandomUnitary;
    c.errors.count = 20;
    RunReport r = run(c);
    EXPECT_EQ(r.aggregate.correction_passes, 20u);
}

TEST(Run, uncorrectable_explicit_errors_fail_the_run) {
    ExperimentConfig c;
    c.protocol = Protocol::P1;
    c.n_appended = 2;
    c.logical = LogicalAmplitudes{0.6, Complex(0.0, 0.8)};
    c.errors.sweep = ErrorSweep::Explicit;
    c.errors.errors = {ErrorSpec::pauli(0, ErrorKind::X),
                       ErrorSpec::pauli(1, ErrorKind::X)};
    RunReport r = run(c);
    EXPECT_FALSE(r.aggregate.pass);
    EXPECT_FALSE(to_json(r, std::nullopt)["pass"].get<bool>());
}

TEST(Determinism, same_seed_same_bytes) {
    EXPECT_EQ(dump(run(p1_config())), dump(run(p1_config())));
    ExperimentConfig other = p1_config();
    other.seed = 8;
    EXPECT_NE(dump(run(p1_config())), dump(run(other)));
}

TEST(Determinism, thread_count_does_not_change_results) {
    ExperimentConfig one = p1_config();
    one.errors.sweep = ErrorSweep::ExhaustivePauli;
    ExperimentConfig four = one;
    four.threads = 4;
    EXPECT_EQ(dump(run(one)), dump(run(four)));
}

TEST(Determinism, timestamp_is_the_only_volatile_field) {
    RunReport r = run(p1_config());
    auto a = to_json(r, std::string("2026-01-01T00:00:00Z"));
    auto b = to_json(r, std::nullopt);
    EXPECT_NE(a.dump(), b.dump());
    a.erase("timestamp");
    b.erase("timestamp");
    EXPECT_EQ(a.dump(), b.dump());
}

TEST(Report, schema_and_provenance) {
    RunReport r = run(p1_config());
    auto j = to_json(r, std::nullopt);
    EXPECT_EQ(j["schema"], kSchemaVersion);
    EXPECT_EQ(j["config_hash"], config_hash(r.config));
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["tool"]["version"], kToolVersion);
    const auto &trial = j["trials"][0];
    EXPECT_TRUE(trial.contains("seed"));
    EXPECT_TRUE(trial["logical"].contains("alpha"));
    const auto &enc = trial["branches"][0]["encoding"];
    EXPECT_EQ(enc["pulses"].size(), 4u);
    EXPECT_TRUE(enc.contains("ghz_phases"));
    EXPECT_TRUE(enc.contains("residual_phase"));
}

TEST(Report, aggregate_recomputes_from_rows) {
    ExperimentConfig c = p1_config();
    c.errors.sweep = ErrorSweep::ExhaustivePauli;
    RunReport r = run(c);
    Aggregate again = aggregate(r.trials);
    EXPECT_EQ(again.correction_cases, r.aggregate.correction_cases);
    EXPECT_EQ(again.min_encoding_fidelity, r.aggregate.min_encoding_fidelity);
    EXPECT_EQ(again.mean_correction_fidelity, r.aggregate.mean_correction_fidelity);
    TrialRow replay = run_trial(c, 5);
    EXPECT_EQ(replay.seed, r.trials[5].seed);
    EXPECT_EQ(replay.logical.alpha, r.trials[5].logical.alpha);
}

TEST(Report, csv_has_one_row_per_case) {
    ExperimentConfig c = p1_config();
    c.trials = 2;
    c.errors.sweep = ErrorSweep::ExhaustivePauli;
    std::istringstream in(to_csv(run(c)));
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("trial,seed,", 0), 0u);
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 2 * 5);
}

TEST(Report, config_hash_tracks_the_config) {
    ExperimentConfig a = p1_config();
    ExperimentConfig b = p1_config();
    EXPECT_EQ(config_hash(a), config_hash(b));
    b.trials = 21;
    EXPECT_NE(config_hash(a), config_hash(b));
    EXPECT_EQ(config_hash(a).size(), 16u);
}

TEST(Validate, parity_constraints) {
    ExperimentConfig c;
    c.protocol = Protocol::P1;
    c.n_appended = 3;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c.protocol = Protocol::P2;
    c.n_appended = 4;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c.n_appended = 3;
    EXPECT_NO_THROW(validate(c));
    c.trials = 0;
    EXPECT_THROW(validate(c), std::invalid_argument);
    c.trials = 1;
    c.protocol = Protocol::Shor;
    c.n_appended = 5;
    EXPECT_THROW(validate(c), std::invalid_argument);
}

TEST(Validate, tolerance_defaults) {
    ExperimentConfig c = p1_config();
    EXPECT_EQ(effective_tolerance(c), 1e-12);
    c.errors.sweep = ErrorSweep::ExhaustivePauli;
    EXPECT_EQ(effective_tolerance(c), 1e-10);
    c.tolerance = 1e-6;
    EXPECT_EQ(effective_tolerance(c), 1e-6);
}

TEST(Parsing, protocols_and_numbers) {
    EXPECT_EQ(parse_protocol("p1"), Protocol::P1);
    EXPECT_EQ(parse_protocol("shor"), Protocol::Shor);
    EXPECT_THROW((void)parse_protocol("p3"), std::invalid_argument);
    EXPECT_EQ(parse_complex("0.6"), Complex(0.6, 0.0));
    EXPECT_EQ(parse_complex("0,0.8"), Complex(0.0, 0.8));
    EXPECT_THROW((void)parse_complex("x"), std::invalid_argument);
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(Parsing, output_directory_from_environment) {
    ::setenv("QENC_OUTPUT_DIR", "/tmp/qenc-out", 1);
    EXPECT_EQ(resolve_output_path("r.json"), "/tmp/qenc-out/r.json");
    EXPECT_EQ(resolve_output_path("/abs/r.json"), "/abs/r.json");
    ::unsetenv("QENC_OUTPUT_DIR");
    EXPECT_EQ(resolve_output_path("r.json"), "r.json");
}

TEST(Verify, kernels_within_tolerance) {
    VerifyReport r = verify_kernels(30, 5);
    EXPECT_TRUE(r.pass());
    for (const auto &c : r.checks) {
        EXPECT_LT(c.measured, 1e-12) << c.name;
    }
}

TEST(Verify, phases_table_passes_and_records_adjudications) {
    VerifyReport r = verify_phases();
    EXPECT_TRUE(r.pass());
    int adjudications = 0;
    for (const auto &c : r.checks) {
        adjudications += c.adjudication ? 1 : 0;
    }
    EXPECT_GE(adjudications, 2);
    std::ostringstream table;
    print_table(table, r);
    EXPECT_NE(table.str().find("Jx2(pi)"), std::string::npos);
}

TEST(Verify, constants_match_checked_in_file) {
    EXPECT_TRUE(verify_constants(QENC_TEST_CONSTANTS_FILE).pass());
    EXPECT_THROW((void)verify_constants("/nonexistent/constants.txt"),
                 std::runtime_error);
}

TEST(Verify, scope_names) {
    EXPECT_EQ(parse_scope("kernels"), VerifyScope::Kernels);
    EXPECT_EQ(parse_scope("constants"), VerifyScope::Constants);
    EXPECT_THROW((void)parse_scope("all"), std::invalid_argument);
}
