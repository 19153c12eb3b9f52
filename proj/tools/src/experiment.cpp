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

#include "qenc/phase.hpp"
#include "qenc/random.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <sstream>
#include <thread>

namespace qenc::cli {

namespace {

using json = nlohmann::ordered_json;

std::string sweep_name(ErrorSweep s) {
    switch (s) {
    case ErrorSweep::None:
        return "none";
    case ErrorSweep::Explicit:
        return "explicit";
    case ErrorSweep::ExhaustivePauli:
        return "exhaustive-pauli";
    case ErrorSweep::RandomUnitary:
        return "random-unitary";
    }
    return "?";
}

std::string branch_name(BranchKind k) {
    switch (k) {
    case BranchKind::Sampled:
        return "sampled";
    case BranchKind::Forced0:
        return "0";
    case BranchKind::Forced1:
        return "1";
    case BranchKind::Both:
        return "both";
    }
    return "?";
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

struct Block {
    StateVector state;
    EncodingReport report;
};

Code code_for(const ExperimentConfig &config) {
    switch (config.protocol) {
    case Protocol::P1:
    case Protocol::CnotBaseline:
        return Code::repetition(config.n_appended + 1);
    case Protocol::P2:
        return Code::repetition(config.n_appended);
    case Protocol::Shor:
        return Code::shor();
    }
    throw std::invalid_argument("unknown protocol");
}

std::vector<Block> encode(const ExperimentConfig &config,
                          const LogicalAmplitudes &l, Rng &rng) {
    std::vector<Block> blocks;
    switch (config.protocol) {
    case Protocol::P1: {
        Encoded e = encode_protocol1(l, config.n_appended);
        blocks.push_back({std::move(e.state), std::move(e.report)});
        break;
    }
    case Protocol::CnotBaseline: {
        Encoded e = encode_cnot_baseline(l, config.n_appended);
        blocks.push_back({std::move(e.state), std::move(e.report)});
        break;
    }
    case Protocol::Shor: {
        Encoded e = shor_encode(l);
        blocks.push_back({std::move(e.state), std::move(e.report)});
        break;
    }
    case Protocol::P2: {
        Protocol2Options options;
        options.branch = config.branch == BranchKind::Sampled
                             ? BranchMode::sampled(rng.uniform())
                             : BranchMode{config.branch, 0.0};
        Protocol2Result r = encode_protocol2(l, config.n_appended, options);
        for (auto &b : r.branches) {
            blocks.push_back({std::move(b.logical), std::move(b.report)});
        }
        break;
    }
    }
    return blocks;
}

std::vector<std::vector<ErrorSpec>> error_cases(const ExperimentConfig &config,
                                                const Code &code, Rng &rng) {
    std::vector<std::vector<ErrorSpec>> cases;
    switch (config.errors.sweep) {
    case ErrorSweep::None:
        break;
    case ErrorSweep::Explicit:
        cases.push_back(config.errors.errors);
        break;
    case ErrorSweep::ExhaustivePauli:
        // Every single-qubit Pauli the code is built to correct: bit flips
        // for the repetition codes, X/Y/Z for the Shor code.
        for (Qubit q = 0; q < code.n_qubits; ++q) {
            cases.push_back({ErrorSpec::pauli(q, ErrorKind::X)});
            if (code.kind == CodeKind::Shor) {
                cases.push_back({ErrorSpec::pauli(q, ErrorKind::Y)});
                cases.push_back({ErrorSpec::pauli(q, ErrorKind::Z)});
            }
        }
        break;
    case ErrorSweep::RandomUnitary:
        for (unsigned k = 0; k < config.errors.count; ++k) {
            const auto q = static_cast<Qubit>(rng() % code.n_qubits);
            const double theta = 2.0 * std::numbers::pi * rng.uniform();
            cases.push_back({ErrorSpec::unitary(q, theta, rng.unit_vector())});
        }
        break;
    }
    return cases;
}

CorrectionRow correct(const StateVector &encoded, const LogicalAmplitudes &l,
                      const Code &code, std::vector<ErrorSpec> errors,
                      double tolerance, Rng &rng) {
    StateVector s = encoded;
    for (const ErrorSpec &e : errors) {
        apply_error(s, e);
    }
    CorrectionRow row;
    if (code.kind == CodeKind::Shor) {
        row.syndrome = shor_correct(s, rng);
    } else {
        std::vector<Qubit> block(code.n_qubits);
        for (Qubit q = 0; q < code.n_qubits; ++q) {
            block[q] = q;
        }
        row.syndrome = repetition_correct(s, block, rng);
    }
    row.errors = std::move(errors);
    row.fidelity = logical_fidelity(s, l, code);
    row.pass = row.fidelity >= 1.0 - tolerance;
    return row;
}

} // namespace

Protocol parse_protocol(const std::string &name) {
    for (Protocol p : {Protocol::P1, Protocol::P2, Protocol::CnotBaseline,
                       Protocol::Shor}) {
        if (to_string(p) == name) {
            return p;
        }
    }
    throw std::invalid_argument("unknown protocol '" + name +
                                "' (expected p1, p2, cnot or shor)");
}

Complex parse_complex(const std::string &text) {
    const auto comma = text.find(',');
    std::size_t used = 0;
    const std::string re = text.substr(0, comma);
    const double real = std::stod(re, &used);
    if (used != re.size()) {
        throw std::invalid_argument("bad complex number '" + text + "'");
    }
    if (comma == std::string::npos) {
        return {real, 0.0};
    }
    const std::string im = text.substr(comma + 1);
    const double imag = std::stod(im, &used);
    if (used != im.size()) {
        throw std::invalid_argument("bad complex number '" + text + "'");
    }
    return {real, imag};
}

std::string format_real(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string resolve_output_path(const std::string &path) {
    namespace fs = std::filesystem;
    const char *dir = std::getenv("QENC_OUTPUT_DIR");
    if (dir == nullptr || *dir == '\0' || fs::path(path).is_absolute()) {
        return path;
    }
    return (fs::path(dir) / path).string();
}

void validate(const ExperimentConfig &config) {
    const unsigned n = config.n_appended;
    switch (config.protocol) {
    case Protocol::P1:
        if (n < 2 || n % 2 != 0) {
            throw std::invalid_argument("p1 needs an even --n >= 2");
        }
        break;
    case Protocol::P2:
        if (n < 3 || n % 2 == 0) {
            throw std::invalid_argument("p2 needs an odd --n >= 3");
        }
        break;
    case Protocol::CnotBaseline:
        if (n < 1) {
            throw std::invalid_argument("cnot needs --n >= 1");
        }
        break;
    case Protocol::Shor:
        if (n != 8) {
            throw std::invalid_argument("shor always appends 8 qubits");
        }
        break;
    }
    if (n + 1 > kMaxQubits) {
        throw std::invalid_argument("--n exceeds the simulator's register size");
    }
    if (config.trials == 0) {
        throw std::invalid_argument("--trials must be >= 1");
    }
    if (config.threads == 0) {
        throw std::invalid_argument("--threads must be >= 1");
    }
    if (config.logical) {
        require_normalized(*config.logical);
    }
    if (config.errors.sweep == ErrorSweep::RandomUnitary &&
        config.errors.count == 0) {
        throw std::invalid_argument("random-unitary needs --error-count >= 1");
    }
    const Code code = code_for(config);
    for (const ErrorSpec &e : config.errors.errors) {
        if (e.qubit >= code.n_qubits) {
            throw std::invalid_argument("error " + to_string(e) +
                                        " is outside the " +
                                        std::to_string(code.n_qubits) +
                                        "-qubit logical block");
        }
        (void)error_matrix(e);
    }
    if (config.tolerance && !(*config.tolerance >= 0.0)) {
        throw std::invalid_argument("--tolerance must be non-negative");
    }
}

double effective_tolerance(const ExperimentConfig &config) {
    if (config.tolerance) {
        return *config.tolerance;
    }
    const bool loose = config.protocol == Protocol::Shor ||
                       config.errors.sweep != ErrorSweep::None;
    return loose ? 1e-10 : 1e-12;
}

json config_to_json(const ExperimentConfig &config) {
    json j;
    j["protocol"] = to_string(config.protocol);
    j["n_appended"] = config.n_appended;
    if (config.logical) {
        j["logical"] = {{"mode", "explicit"},
                        {"alpha", complex_json(config.logical->alpha)},
                        {"beta", complex_json(config.logical->beta)}};
    } else {
        j["logical"] = {{"mode", "random"}};
    }
    j["seed"] = config.seed;
    json errors;
    errors["sweep"] = sweep_name(config.errors.sweep);
    if (config.errors.sweep == ErrorSweep::Explicit) {
        json list = json::array();
        for (const auto &e : config.errors.errors) {
            list.push_back(to_string(e));
        }
        errors["errors"] = std::move(list);
    }
    if (config.errors.sweep == ErrorSweep::RandomUnitary) {
        errors["count"] = config.errors.count;
    }
    j["errors"] = std::move(errors);
    j["trials"] = config.trials;
    if (config.protocol == Protocol::P2) {
        j["branch"] = branch_name(config.branch);
    }
    j["tolerance"] = effective_tolerance(config);
    return j;
}

std::string config_hash(const ExperimentConfig &config) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : config_to_json(config).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

TrialRow run_trial(const ExperimentConfig &config, unsigned index) {
    TrialRow row;
    row.index = index;
    row.seed = trial_seed(config.seed, index);
    Rng rng(row.seed);
    row.logical = config.logical ? *config.logical : rng.logical();
    const double tol = effective_tolerance(config);
    const Code code = code_for(config);

    std::vector<Block> blocks = encode(config, row.logical, rng);
    const auto cases = error_cases(config, code, rng);
    row.pass = true;
    for (Block &b : blocks) {
        BranchRow branch;
        row.pass = row.pass && b.report.fidelity_to_target >= 1.0 - tol;
        for (const auto &errors : cases) {
            branch.corrections.push_back(
                correct(b.state, row.logical, code, errors, tol, rng));
            row.pass = row.pass && branch.corrections.back().pass;
        }
        branch.encoding = std::move(b.report);
        row.branches.push_back(std::move(branch));
    }
    return row;
}

Aggregate aggregate(const std::vector<TrialRow> &rows) {
    Aggregate a;
    a.trials = static_cast<unsigned>(rows.size());
    double enc_sum = 0.0;
    double cor_sum = 0.0;
    for (const TrialRow &t : rows) {
        if (!t.pass) {
            ++a.failed_trials;
        }
        for (const BranchRow &b : t.branches) {
            ++a.branches;
            const double f = b.encoding.fidelity_to_target;
            a.min_encoding_fidelity = std::min(a.min_encoding_fidelity, f);
            enc_sum += f;
            const unsigned count = b.encoding.entangling_pulse_count;
            if (std::find(a.entangling_pulse_counts.begin(),
                          a.entangling_pulse_counts.end(),
                          count) == a.entangling_pulse_counts.end()) {
                a.entangling_pulse_counts.push_back(count);
            }
            const double phase = wrap_phase(b.encoding.residual_phase);
            if (std::none_of(a.residual_phases.begin(), a.residual_phases.end(),
                             [&](double p) {
                                 return phase_distance(p, phase) < 1e-12;
                             })) {
                a.residual_phases.push_back(phase);
            }
            for (const CorrectionRow &c : b.corrections) {
                ++a.correction_cases;
                a.correction_passes += c.pass ? 1U : 0U;
                a.min_correction_fidelity =
                    std::min(a.min_correction_fidelity.value_or(1.0), c.fidelity);
                cor_sum += c.fidelity;
            }
        }
    }
    std::sort(a.entangling_pulse_counts.begin(), a.entangling_pulse_counts.end());
    std::sort(a.residual_phases.begin(), a.residual_phases.end());
    if (a.branches > 0) {
        a.mean_encoding_fidelity = enc_sum / a.branches;
    }
    if (a.correction_cases > 0) {
        a.mean_correction_fidelity = cor_sum / a.correction_cases;
    }
    a.pass = a.failed_trials == 0;
    return a;
}

RunReport run(const ExperimentConfig &config) {
    validate(config);
    RunReport report;
    report.config = config;
    report.trials.resize(config.trials);

    std::atomic<unsigned> next{0};
    auto worker = [&] {
        for (unsigned i = next++; i < config.trials; i = next++) {
            report.trials[i] = run_trial(config, i);
        }
    };
    const unsigned workers = std::min(config.threads, config.trials);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    report.aggregate = aggregate(report.trials);
    return report;
}

json to_json(const EncodingReport &r) {
    json j;
    j["protocol"] = to_string(r.protocol);
    j["n_appended"] = r.n_appended;
    json pulses = json::array();
    for (const PulseSpec &p : r.pulses) {
        pulses.push_back({{"kind", to_string(p.kind)},
                          {"theta", p.theta},
                          {"targets", p.targets}});
    }
    j["pulses"] = std::move(pulses);
    j["entangling_pulse_count"] = r.entangling_pulse_count;
    if (r.measurement) {
        j["measurement"] = {{"qubit", r.measurement->qubit},
                            {"outcome", r.measurement->outcome},
                            {"probability", r.measurement->probability}};
    } else {
        j["measurement"] = nullptr;
    }
    j["residual_phase"] = wrap_phase(r.residual_phase);
    j["measured_residual_phase"] = optional_json(r.measured_residual_phase);
    j["fidelity_to_target"] = r.fidelity_to_target;
    j["logical_block"] = r.logical_block;
    json ghz = json::array();
    for (const GhzPhasePair &g : r.ghz_phases) {
        ghz.push_back(json::array({wrap_phase(g.phase0), wrap_phase(g.phase1)}));
    }
    j["ghz_phases"] = std::move(ghz);
    return j;
}

namespace {

json syndrome_json(const SyndromeResult &s) {
    json parities = json::array();
    for (const ParityRecord &p : s.parities) {
        parities.push_back({{"stabilizer", p.stabilizer.str()},
                            {"eigenvalue", p.eigenvalue},
                            {"probability", p.probability}});
    }
    json corrections = json::array();
    for (const Correction &c : s.corrections) {
        corrections.push_back(
            {{"qubit", c.qubit}, {"pauli", std::string(1, c.pauli)}});
    }
    return {{"parities", std::move(parities)},
            {"corrections", std::move(corrections)}};
}

} // namespace

json to_json(const RunReport &report, const std::optional<std::string> &timestamp) {
    json j;
    j["schema"] = kSchemaVersion;
    j["tool"] = {{"name", "qenc"}, {"version", kToolVersion}};
    j["command"] = "run";
    j["config"] = config_to_json(report.config);
    j["config_hash"] = config_hash(report.config);
    j["seed"] = report.config.seed;
    j["timestamp"] = timestamp ? json(*timestamp) : json(nullptr);

    json trials = json::array();
    for (const TrialRow &t : report.trials) {
        json tj;
        tj["trial"] = t.index;
        tj["seed"] = t.seed;
        tj["logical"] = {{"alpha", complex_json(t.logical.alpha)},
                         {"beta", complex_json(t.logical.beta)}};
        json branches = json::array();
        for (const BranchRow &b : t.branches) {
            json bj;
            bj["encoding"] = to_json(b.encoding);
            json cases = json::array();
            for (const CorrectionRow &c : b.corrections) {
                json errors = json::array();
                for (const ErrorSpec &e : c.errors) {
                    errors.push_back(to_string(e));
                }
                cases.push_back({{"errors", std::move(errors)},
                                 {"syndrome", syndrome_json(c.syndrome)},
                                 {"fidelity", c.fidelity},
                                 {"pass", c.pass}});
            }
            bj["corrections"] = std::move(cases);
            branches.push_back(std::move(bj));
        }
        tj["branches"] = std::move(branches);
        tj["pass"] = t.pass;
        trials.push_back(std::move(tj));
    }
    j["trials"] = std::move(trials);

    const Aggregate &a = report.aggregate;
    j["aggregate"] = {
        {"trials", a.trials},
        {"branches", a.branches},
        {"failed_trials", a.failed_trials},
        {"min_encoding_fidelity", a.min_encoding_fidelity},
        {"mean_encoding_fidelity", a.mean_encoding_fidelity},
        {"correction_cases", a.correction_cases},
        {"correction_passes", a.correction_passes},
        {"min_correction_fidelity", optional_json(a.min_correction_fidelity)},
        {"mean_correction_fidelity", optional_json(a.mean_correction_fidelity)},
        {"entangling_pulse_counts", a.entangling_pulse_counts},
        {"residual_phases", a.residual_phases},
        {"tolerance", effective_tolerance(report.config)},
    };
    j["pass"] = a.pass;
    return j;
}

std::string to_csv(const RunReport &report) {
    std::ostringstream out;
    out << "trial,seed,alpha_re,alpha_im,beta_re,beta_im,outcome,probability,"
           "entangling_pulse_count,residual_phase,measured_residual_phase,"
           "encoding_fidelity,errors,syndrome,corrections,correction_fidelity,"
           "pass\n";
    for (const TrialRow &t : report.trials) {
        for (const BranchRow &b : t.branches) {
            const EncodingReport &e = b.encoding;
            std::ostringstream prefix;
            prefix << t.index << ',' << t.seed << ','
                   << format_real(t.logical.alpha.real()) << ','
                   << format_real(t.logical.alpha.imag()) << ','
                   << format_real(t.logical.beta.real()) << ','
                   << format_real(t.logical.beta.imag()) << ','
                   << (e.measurement ? std::to_string(e.measurement->outcome) : "")
                   << ','
                   << (e.measurement ? format_real(e.measurement->probability) : "")
                   << ',' << e.entangling_pulse_count << ','
                   << format_real(wrap_phase(e.residual_phase)) << ','
                   << (e.measured_residual_phase
                           ? format_real(*e.measured_residual_phase)
                           : "")
                   << ',' << format_real(e.fidelity_to_target) << ',';
            if (b.corrections.empty()) {
                out << prefix.str() << ",,,," << (t.pass ? "true" : "false")
                    << '\n';
                continue;
            }
            for (const CorrectionRow &c : b.corrections) {
                std::string errors;
                for (const ErrorSpec &er : c.errors) {
                    errors += (errors.empty() ? "" : ";") + to_string(er);
                }
                std::string syndrome;
                for (const ParityRecord &p : c.syndrome.parities) {
                    syndrome += p.eigenvalue == 1 ? '+' : '-';
                }
                std::string fixes;
                for (const Correction &f : c.syndrome.corrections) {
                    fixes += (fixes.empty() ? "" : ";") + std::string(1, f.pauli) +
                             std::to_string(f.qubit);
                }
                out << prefix.str() << errors << ',' << syndrome << ',' << fixes
                    << ',' << format_real(c.fidelity) << ','
                    << (c.pass ? "true" : "false") << '\n';
            }
        }
    }
    return out.str();
}

} // namespace qenc::cli
