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

#include "qenc/cli/verify.hpp"

#include "qenc/cli/experiment.hpp"
#include "qenc/derived_constants.hpp"
#include "qenc/gates.hpp"
#include "qenc/oracle.hpp"
#include "qenc/phase.hpp"
#include "qenc/protocols.hpp"
#include "qenc/random.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace qenc::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Check compare(std::string name, std::string reference, double expected,
              double measured, double tolerance, bool is_phase) {
    Check c{std::move(name), std::move(reference), expected, measured};
    c.deviation = is_phase ? phase_distance(expected, measured)
                           : std::abs(expected - measured);
    c.tolerance = tolerance;
    c.pass = std::isfinite(c.deviation) && c.deviation <= tolerance;
    return c;
}

Check record(std::string name, std::string reference, double expected,
             double measured, bool is_phase) {
    Check c = compare(std::move(name), std::move(reference), expected, measured,
                      kTolerance, is_phase);
    c.adjudication = true;
    return c;
}

std::string targets_text(const std::vector<Qubit> &ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out += (i ? "," : "") + std::to_string(ts[i]);
    }
    return out + "}";
}

} // namespace

bool VerifyReport::pass() const {
    for (const Check &c : checks) {
        if (!c.adjudication && !c.pass) {
            return false;
        }
    }
    return true;
}

VerifyScope parse_scope(const std::string &name) {
    if (name == "kernels") {
        return VerifyScope::Kernels;
    }
    if (name == "phases") {
        return VerifyScope::Phases;
    }
    if (name == "constants") {
        return VerifyScope::Constants;
    }
    throw std::invalid_argument("unknown verify scope '" + name +
                                "' (expected kernels, phases or constants)");
}

VerifyReport verify_kernels(unsigned cases, unsigned long long seed) {
    using oracle::HamiltonianKind;
    VerifyReport report{VerifyScope::Kernels, {}};
    Rng rng(seed);
    double worst = 0.0;
    for (unsigned k = 0; k < cases; ++k) {
        const unsigned n = 1 + k % 8;
        auto kind = static_cast<HamiltonianKind>((k / 8) % 3);
        if (kind == HamiltonianKind::ZZ && n < 2) {
            kind = HamiltonianKind::Jx2;
        }
        std::vector<Qubit> targets;
        if (kind == HamiltonianKind::ZZ) {
            const auto a = static_cast<Qubit>(rng() % n);
            auto b = static_cast<Qubit>(rng() % (n - 1));
            b += b >= a ? 1 : 0;
            targets = {a, b};
        } else {
            while (targets.empty()) {
                for (Qubit q = 0; q < n; ++q) {
                    if (rng() & 1U) {
                        targets.push_back(q);
                    }
                }
            }
        }
        const double theta = (4.0 * rng.uniform() - 2.0) * kPi;
        const StateVector input = rng.state(n);

        StateVector fast = input;
        std::string label;
        switch (kind) {
        case HamiltonianKind::Jx2:
            apply_jx2(fast, theta, targets);
            label = "Jx2";
            break;
        case HamiltonianKind::Jx:
            apply_jx(fast, theta, targets);
            label = "Jx";
            break;
        case HamiltonianKind::ZZ:
            apply_zz(fast, theta, targets[0], targets[1]);
            label = "ZZ";
            break;
        }
        const StateVector dense = oracle::dense_evolve(
            input, oracle::build_hamiltonian(kind, targets, n), theta);
        const double dev = max_deviation(fast, dense);
        worst = std::max(worst, dev);
        char name[128];
        std::snprintf(name, sizeof name, "%s n=%u targets=%s theta=%.6f",
                      label.c_str(), n, targets_text(targets).c_str(), theta);
        report.checks.push_back(
            compare(name, "dense eigendecomposition propagator", 0.0, dev,
                    kTolerance, false));
    }
    report.checks.push_back(compare("max amplitude deviation",
                                    "all kernel cases", 0.0, worst, kTolerance,
                                    false));
    return report;
}

VerifyReport verify_phases() {
    VerifyReport report{VerifyScope::Phases, {}};

    for (unsigned n : {2U, 4U, 6U, 8U}) {
        for (int pattern : {0, 1}) {
            StateVector s = new_basis_state(n, std::string(n, pattern ? '1' : '0'));
            std::vector<Qubit> targets(n);
            for (Qubit q = 0; q < n; ++q) {
                targets[q] = q;
            }
            const GhzPhasePair measured = *ghz_pulse(s, targets).phases;
            const GhzPhasePair expected = ghz_phases_closed_form(n, pattern);
            const std::string base = "GHZ N=" + std::to_string(n) + " from |" +
                                     std::string(n, pattern ? '1' : '0') + ">";
            report.checks.push_back(compare(base + " phase(0...0)",
                                            pattern ? "pi/4 + N pi/2" : "-pi/4",
                                            expected.phase0, measured.phase0,
                                            kTolerance, true));
            report.checks.push_back(compare(base + " phase(1...1)",
                                            pattern ? "-pi/4" : "pi/4 + N pi/2",
                                            expected.phase1, measured.phase1,
                                            kTolerance, true));
        }
    }

    const LogicalAmplitudes probe{{0.6, 0.0}, {0.0, 0.8}};
    for (unsigned n : {2U, 4U, 6U}) {
        const Encoded e = encode_protocol1(probe, n);
        report.checks.push_back(compare(
            "P1 N=" + std::to_string(n) + " residual phase", "arg(-i (-1)^{N/2})",
            protocol1_residual_phase(n),
            e.report.measured_residual_phase.value_or(kNaN), kTolerance, true));
        report.checks.push_back(compare("P1 N=" + std::to_string(n) + " fidelity",
                                        "alpha|0...0> + beta|1...1>", 1.0,
                                        e.report.fidelity_to_target, kTolerance,
                                        false));
    }

    const double r = 1.0 / std::numbers::sqrt2;
    for (unsigned n : {3U, 5U, 7U}) {
        const LogicalAmplitudes zero{{1.0, 0.0}, {0.0, 0.0}};
        Protocol2Options opts;
        opts.branch = BranchMode::forced0();
        const Protocol2Result z = encode_protocol2(zero, n, opts);
        const StateVector &pre = z.pre_measurement;
        const double measured =
            wrap_phase(std::arg(pre[pre.size() - 1]) - std::arg(pre[0]));
        const std::string base = "P2 N=" + std::to_string(n);
        report.checks.push_back(compare(base + " relative phase",
                                        "GHZ phases of the N+1 qubit pulse",
                                        protocol2_relative_phase(n), measured,
                                        kTolerance, true));
        report.checks.push_back(record(base + " relative phase vs (N+1)pi/2",
                                       "quoted (N+1) pi/2",
                                       protocol2_quoted_phase(n), measured, true));

        const Protocol2Result both =
            encode_protocol2({{r, 0.0}, {0.0, r}}, n, Protocol2Options{});
        for (const Protocol2Branch &b : both.branches) {
            const std::string tag = base + " branch " + std::to_string(b.outcome);
            report.checks.push_back(compare(tag + " probability", "1/2", 0.5,
                                            b.probability, kTolerance, false));
            report.checks.push_back(compare(tag + " fidelity",
                                            "alpha|0...0> + beta|1...1>", 1.0,
                                            b.report.fidelity_to_target,
                                            kTolerance, false));
        }

        Protocol2Options alt;
        alt.branch = BranchMode::forced1();
        alt.correction = OutcomeOneCorrection::Jx2Pulse;
        const Protocol2Result a = encode_protocol2(probe, n, alt);
        report.checks.push_back(record(
            base + " branch 1 corrected by Jx2(pi)", "exchange fidelity 1", 1.0,
            a.branches.front().report.fidelity_to_target, false));

        StateVector s(n);
        std::vector<Qubit> all(n);
        for (Qubit q = 0; q < n; ++q) {
            all[q] = q;
        }
        apply_jx2(s, kPi, all);
        report.checks.push_back(record(
            "Jx2(pi) on |0...0>, N=" + std::to_string(n) + ": weight on |1...1>",
            "claimed exchange |0...0> -> |1...1>", 1.0,
            std::norm(s[s.size() - 1]), false));
    }
    return report;
}

VerifyReport verify_constants(const std::string &constants_file) {
    VerifyReport report{VerifyScope::Constants, {}};
    std::ifstream in(constants_file);
    if (!in) {
        throw std::runtime_error("cannot read constants file " + constants_file);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto on_disk = oracle::parse_constants(buffer.str());

    const auto derived = oracle::derive_all();
    for (const auto &c : derived) {
        const auto it = on_disk.find(c.key);
        report.checks.push_back(compare(c.key + " (file)", constants_file, c.value,
                                        it == on_disk.end() ? kNaN : it->second,
                                        kTolerance, false));
        double compiled = kNaN;
        for (const auto &entry : derived::kAll) {
            if (entry.key == c.key) {
                compiled = entry.value;
            }
        }
        report.checks.push_back(compare(c.key + " (compiled)", "library build",
                                        c.value, compiled, kTolerance, false));
    }
    for (const auto &[key, value] : on_disk) {
        bool known = false;
        for (const auto &c : derived) {
            known = known || c.key == key;
        }
        if (!known) {
            report.checks.push_back(compare(key + " (file)",
                                            "no derivation produces this key",
                                            kNaN, value, kTolerance, false));
        }
    }
    return report;
}

VerifyReport verify(VerifyScope scope, const std::string &constants_file) {
    switch (scope) {
    case VerifyScope::Kernels:
        return verify_kernels();
    case VerifyScope::Phases:
        return verify_phases();
    case VerifyScope::Constants:
        return verify_constants(constants_file);
    }
    throw std::invalid_argument("unknown scope");
}

void print_table(std::ostream &out, const VerifyReport &report) {
    char line[512];
    std::snprintf(line, sizeof line, "%-6s %-58s %22s %22s %10s  %s\n", "status",
                  "check", "expected", "measured", "deviation", "reference");
    out << line;
    for (const Check &c : report.checks) {
        const char *status = c.adjudication ? (c.pass ? "holds" : "differs")
                                            : (c.pass ? "PASS" : "FAIL");
        std::snprintf(line, sizeof line, "%-6s %-58s %22.17g %22.17g %10.3e  %s\n",
                      status, c.name.c_str(), c.expected, c.measured, c.deviation,
                      c.reference.c_str());
        out << line;
    }
    out << (report.pass() ? "verify: all checks passed\n"
                          : "verify: FAILED\n");
}

json to_json(const VerifyReport &report, const std::optional<std::string> &timestamp) {
    const char *scope = report.scope == VerifyScope::Kernels   ? "kernels"
                        : report.scope == VerifyScope::Phases  ? "phases"
                                                               : "constants";
    auto num = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
    json checks = json::array();
    for (const Check &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"reference", c.reference},
                          {"expected", num(c.expected)},
                          {"measured", num(c.measured)},
                          {"deviation", num(c.deviation)},
                          {"tolerance", c.tolerance},
                          {"adjudication", c.adjudication},
                          {"pass", c.pass}});
    }
    json j;
    j["schema"] = 1;
    j["tool"] = {{"name", "qenc"}, {"version", kToolVersion}};
    j["command"] = "verify";
    j["scope"] = scope;
    j["timestamp"] = timestamp ? json(*timestamp) : json(nullptr);
    j["checks"] = std::move(checks);
    j["pass"] = report.pass();
    return j;
}

} // namespace qenc::cli
