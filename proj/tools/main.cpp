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

// qenc: batch experiments for collective-pulse logical qubit encoding.
//
//   qenc run --protocol p1 --n 4 --logical random --seed 7 --trials 20
//   qenc run --protocol shor --errors exhaustive-pauli
//   qenc verify phases
//   qenc derive --output core/data/derived_constants.txt

#include "qenc/cli/experiment.hpp"
#include "qenc/cli/verify.hpp"
#include "qenc/oracle.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>

#ifndef QENC_DEFAULT_CONSTANTS_FILE
#define QENC_DEFAULT_CONSTANTS_FILE "core/data/derived_constants.txt"
#endif

namespace {

using namespace qenc;
using namespace qenc::cli;

constexpr int kExitPass = 0;
constexpr int kExitToleranceFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Writes to `path`, or stdout when empty. Returns false on I/O failure.
bool emit(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    const std::filesystem::path parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty()) {
        std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "qenc: cannot open " << path << " for writing\n";
        return false;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "qenc: failed writing " << path << '\n';
        return false;
    }
    return true;
}

struct RunArgs {
    std::string protocol;
    unsigned n = 0;
    std::string logical = "random";
    std::string alpha = "1";
    std::string beta = "0";
    std::uint64_t seed = 0;
    unsigned trials = 1;
    std::string errors = "none";
    std::vector<std::string> error_list;
    unsigned error_count = 100;
    std::string branch = "both";
    double tolerance = -1.0;
    unsigned threads = 1;
    std::string output;
    std::string format = "json";
    bool no_timestamp = false;
};

ExperimentConfig to_config(const RunArgs &a) {
    ExperimentConfig c;
    c.protocol = parse_protocol(a.protocol);
    c.n_appended = a.n != 0 ? a.n : (c.protocol == Protocol::Shor ? 8U : 0U);
    if (a.logical == "explicit") {
        c.logical = LogicalAmplitudes{parse_complex(a.alpha), parse_complex(a.beta)};
    } else if (a.logical != "random") {
        throw std::invalid_argument("--logical must be random or explicit");
    }
    c.seed = a.seed;
    c.trials = a.trials;
    if (!a.error_list.empty()) {
        c.errors.sweep = ErrorSweep::Explicit;
        for (const auto &e : a.error_list) {
            c.errors.errors.push_back(parse_error_spec(e));
        }
    } else if (a.errors == "exhaustive-pauli") {
        c.errors.sweep = ErrorSweep::ExhaustivePauli;
    } else if (a.errors == "random-unitary") {
        c.errors.sweep = ErrorSweep::RandomUnitary;
        c.errors.count = a.error_count;
    } else if (a.errors != "none") {
        throw std::invalid_argument(
            "--errors must be none, exhaustive-pauli or random-unitary");
    }
    if (a.branch == "sampled") {
        c.branch = BranchKind::Sampled;
    } else if (a.branch == "0") {
        c.branch = BranchKind::Forced0;
    } else if (a.branch == "1") {
        c.branch = BranchKind::Forced1;
    } else if (a.branch == "both") {
        c.branch = BranchKind::Both;
    } else {
        throw std::invalid_argument("--branch must be sampled, 0, 1 or both");
    }
    if (a.tolerance >= 0.0) {
        c.tolerance = a.tolerance;
    }
    c.threads = a.threads;
    c.format = a.format == "csv" ? ReportFormat::Csv : ReportFormat::Json;
    c.output = a.output;
    return c;
}

int do_run(const RunArgs &args) {
    ExperimentConfig config;
    try {
        config = to_config(args);
        validate(config);
    } catch (const std::exception &e) {
        std::cerr << "qenc run: " << e.what() << '\n';
        return kExitUsage;
    }
    const RunReport report = run(config);

    std::string path = config.output;
    if (path.empty() && std::getenv("QENC_OUTPUT_DIR") != nullptr) {
        path = "qenc-" + to_string(config.protocol) + "-" + config_hash(config) +
               (config.format == ReportFormat::Csv ? ".csv" : ".json");
    }
    if (!path.empty()) {
        path = resolve_output_path(path);
    }
    const std::string text =
        config.format == ReportFormat::Csv
            ? to_csv(report)
            : to_json(report, args.no_timestamp
                                  ? std::nullopt
                                  : std::optional<std::string>(utc_timestamp()))
                      .dump(2) +
                  "\n";
    if (!emit(path, text)) {
        return kExitIo;
    }

    const Aggregate &a = report.aggregate;
    std::cerr << "qenc run: protocol=" << to_string(config.protocol)
              << " n=" << config.n_appended << " trials=" << a.trials
              << " min_fidelity=" << format_real(a.min_encoding_fidelity);
    if (a.min_correction_fidelity) {
        std::cerr << " corrected=" << a.correction_passes << "/"
                  << a.correction_cases
                  << " min_corrected_fidelity=" << format_real(*a.min_correction_fidelity);
    }
    std::cerr << " pulses=";
    for (std::size_t i = 0; i < a.entangling_pulse_counts.size(); ++i) {
        std::cerr << (i ? "," : "") << a.entangling_pulse_counts[i];
    }
    std::cerr << (a.pass ? " PASS" : " FAIL") << '\n';
    if (!path.empty()) {
        std::cerr << "qenc run: report written to " << path << '\n';
    }
    return a.pass ? kExitPass : kExitToleranceFailure;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Collective-pulse logical qubit encoding simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    RunArgs run_args;
    CLI::App *run_cmd = app.add_subcommand("run", "Run an encoding experiment");
    run_cmd->add_option("--protocol", run_args.protocol, "p1, p2, cnot or shor")
        ->required()
        ->check(CLI::IsMember({"p1", "p2", "cnot", "shor"}));
    run_cmd->add_option("--n", run_args.n,
                        "Appended qubits N (p1: even, p2: odd; shor: 8)");
    run_cmd->add_option("--logical", run_args.logical, "random or explicit")
        ->check(CLI::IsMember({"random", "explicit"}));
    run_cmd->add_option("--alpha", run_args.alpha, "Explicit alpha as re[,im]");
    run_cmd->add_option("--beta", run_args.beta, "Explicit beta as re[,im]");
    run_cmd->add_option("--seed", run_args.seed, "Master seed");
    run_cmd->add_option("--trials", run_args.trials, "Number of trials");
    run_cmd->add_option("--errors", run_args.errors,
                        "none, exhaustive-pauli or random-unitary");
    run_cmd->add_option("--error", run_args.error_list,
                        "Explicit error, e.g. X:3 or U:7:1.234:0.6:0:0.8 "
                        "(repeatable; applied together)");
    run_cmd->add_option("--error-count", run_args.error_count,
                        "Random unitary errors per trial");
    run_cmd->add_option("--branch", run_args.branch,
                        "p2 measurement branch: sampled, 0, 1 or both");
    run_cmd->add_option("--tolerance", run_args.tolerance,
                        "Fidelity tolerance (default 1e-12, 1e-10 with errors "
                        "or shor)");
    run_cmd->add_option("--threads", run_args.threads, "Worker threads");
    run_cmd->add_option("--output,-o", run_args.output,
                        "Report path (relative paths resolve against "
                        "$QENC_OUTPUT_DIR)");
    run_cmd->add_option("--format", run_args.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    run_cmd->add_flag("--no-timestamp", run_args.no_timestamp,
                      "Write a null timestamp");

    std::string scope;
    std::string constants_file = QENC_DEFAULT_CONSTANTS_FILE;
    std::string verify_output;
    CLI::App *verify_cmd =
        app.add_subcommand("verify", "Check kernels, phases or derived constants");
    verify_cmd->add_option("scope", scope, "kernels, phases or constants")
        ->required()
        ->check(CLI::IsMember({"kernels", "phases", "constants"}));
    verify_cmd->add_option("--constants", constants_file, "Constants file to diff");
    verify_cmd->add_option("--output,-o", verify_output, "JSON report path");

    std::string derive_output;
    CLI::App *derive_cmd = app.add_subcommand(
        "derive", "Re-derive oracle constants and write the constants file");
    derive_cmd->add_option("--output,-o", derive_output,
                           "Destination (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (*run_cmd) {
        return do_run(run_args);
    }
    if (*verify_cmd) {
        try {
            const VerifyReport report = verify(parse_scope(scope), constants_file);
            print_table(std::cout, report);
            if (!verify_output.empty() &&
                !emit(resolve_output_path(verify_output),
                      to_json(report, utc_timestamp()).dump(2) + "\n")) {
                return kExitIo;
            }
            return report.pass() ? kExitPass : kExitToleranceFailure;
        } catch (const std::exception &e) {
            std::cerr << "qenc verify: " << e.what() << '\n';
            return kExitIo;
        }
    }
    if (*derive_cmd) {
        try {
            const auto constants = oracle::derive_all();
            return emit(derive_output, oracle::format_constants(constants))
                       ? kExitPass
                       : kExitIo;
        } catch (const oracle::DerivationFailure &e) {
            std::cerr << "qenc derive: " << e.what() << '\n';
            return kExitToleranceFailure;
        }
    }
    return kExitUsage;
}
