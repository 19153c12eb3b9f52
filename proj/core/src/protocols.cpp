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

#include "qenc/protocols.hpp"

#include "qenc/codewords.hpp"
#include "qenc/derived_constants.hpp"
#include "qenc/phase.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qenc {

namespace {

constexpr double kPi = std::numbers::pi;

/// Amplitudes below this leave the relative logical phase undefined.
constexpr double kPhaseReadbackFloor = 1e-6;

/// Deviation from the defining state that aborts a protocol.
constexpr double kProtocolDeviation = 1e-10;

class PulseLog {
  public:
    PulseLog(StateVector &s, std::vector<PulseSpec> &pulses)
        : s_(s), pulses_(pulses) {}

    void operator()(PulseSpec pulse) {
        apply_pulse(s_, pulse);
        pulses_.push_back(std::move(pulse));
    }

  private:
    StateVector &s_;
    std::vector<PulseSpec> &pulses_;
};

std::vector<Qubit> qubit_range(Qubit first, Qubit last_inclusive) {
    std::vector<Qubit> qs;
    for (Qubit q = first; q <= last_inclusive; ++q) {
        qs.push_back(q);
    }
    return qs;
}

void notify(const StepObserver &observer, std::string_view step,
            const StateVector &s) {
    if (observer) {
        observer(step, s);
    }
}

/// arg(c_{1...1} / beta) - arg(c_{0...0} / alpha).
std::optional<double> readback_phase(const StateVector &s,
                                     const LogicalAmplitudes &l) {
    if (std::abs(l.alpha) < kPhaseReadbackFloor ||
        std::abs(l.beta) < kPhaseReadbackFloor) {
        return std::nullopt;
    }
    const Complex zero = s[0] / l.alpha;
    const Complex ones = s[s.size() - 1] / l.beta;
    return wrap_phase(std::arg(ones) - std::arg(zero));
}

void finish_report(EncodingReport &report) {
    report.entangling_pulse_count = count_entangling_pulses(report.pulses);
}

} // namespace

std::string to_string(Protocol p) {
    switch (p) {
    case Protocol::P1:
        return "p1";
    case Protocol::P2:
        return "p2";
    case Protocol::CnotBaseline:
        return "cnot";
    case Protocol::Shor:
        return "shor";
    }
    return "?";
}

unsigned count_entangling_pulses(std::span<const PulseSpec> pulses) {
    return static_cast<unsigned>(
        std::count_if(pulses.begin(), pulses.end(),
                      [](const PulseSpec &p) { return p.is_entangling(); }));
}

// --- GHZ pulse -----------------------------------------------------------

double odd_n_linear_angle() noexcept { return derived::odd_n_linear_angle; }

GhzPhasePair ghz_phases_closed_form(unsigned n, int pattern) {
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument(
            "closed-form GHZ phases hold for even set sizes only");
    }
    const double edge = -kPi / 4;
    const double far = wrap_phase(kPi / 4 + n * kPi / 2);
    return pattern == 0 ? GhzPhasePair{edge, far} : GhzPhasePair{far, edge};
}

GhzPulseResult ghz_pulse(StateVector &s, std::span<const Qubit> targets,
                         GhzMode mode) {
    validate_targets(s, targets);
    const std::uint64_t mask = StateVector::mask_of(targets);

    std::uint64_t pattern_mask = 0;
    std::optional<StateVector> input;
    if (mode == GhzMode::Extract) {
        double on_zero = 0.0;
        double on_ones = 0.0;
        for (std::size_t b = 0; b < s.size(); ++b) {
            if ((b & mask) == 0) {
                on_zero += std::norm(s[b]);
            } else if ((b & mask) == mask) {
                on_ones += std::norm(s[b]);
            }
        }
        if (on_zero >= 1.0 - kTolerance) {
            pattern_mask = 0;
        } else if (on_ones >= 1.0 - kTolerance) {
            pattern_mask = mask;
        } else {
            throw std::invalid_argument(
                "GHZ phase extraction needs the targets in |0...0> or "
                "|1...1>; use GhzMode::Raw");
        }
        input = s;
    }

    GhzPulseResult result;
    PulseLog log(s, result.pulses);
    const std::vector<Qubit> ts(targets.begin(), targets.end());
    log({PulseKind::Jx2, kPi / 2, ts});
    if (ts.size() % 2 == 1) {
        log({PulseKind::Jx, odd_n_linear_angle(), ts});
    }

    if (input) {
        // Overlaps of the output with |0...0>_T (x) rest and |1...1>_T (x)
        // rest, where rest is the untouched part of the input.
        Complex c0{0.0, 0.0};
        Complex c1{0.0, 0.0};
        for (std::size_t b = 0; b < input->size(); ++b) {
            if ((b & mask) != pattern_mask) {
                continue;
            }
            const Complex in = std::conj((*input)[b]);
            c0 += in * s[b & ~mask];
            c1 += in * s[(b & ~mask) | mask];
        }
        const double support = std::norm(c0) + std::norm(c1);
        if (1.0 - support > kGhzLeakageTolerance) {
            throw ProtocolFailure("GHZ pulse leaked " +
                                  std::to_string(1.0 - support) +
                                  " probability outside the two components");
        }
        if (std::abs(std::norm(c0) - 0.5) > kTolerance ||
            std::abs(std::norm(c1) - 0.5) > kTolerance) {
            throw ProtocolFailure("GHZ components are not equal weight");
        }
        result.phases = GhzPhasePair{std::arg(c0), std::arg(c1)};
    }
    return result;
}

// --- Protocol 1 ----------------------------------------------------------

double protocol1_residual_phase(unsigned n_appended) {
    // -i (-1)^{N/2}: -pi/2 plus pi for odd N/2.
    const double sign = (n_appended / 2) % 2 == 0 ? 0.0 : kPi;
    return wrap_phase(-kPi / 2 + sign);
}

Encoded encode_protocol1(const LogicalAmplitudes &l, unsigned n_appended,
                         const Protocol1Options &options) {
    if (n_appended < 2 || n_appended % 2 != 0) {
        throw std::invalid_argument(
            "protocol 1 needs an even number (>= 2) of appended qubits, got " +
            std::to_string(n_appended));
    }
    if (options.cz_partner < 1 || options.cz_partner > n_appended) {
        throw std::invalid_argument("CZ partner must be an appended qubit");
    }
    StateVector s = from_logical(l, n_appended);
    EncodingReport report;
    report.protocol = Protocol::P1;
    report.n_appended = n_appended;
    report.logical_block = qubit_range(0, n_appended);
    notify(options.observer, "initial", s);

    const std::vector<Qubit> appended = qubit_range(1, n_appended);
    GhzPulseResult ghz = ghz_pulse(s, appended, GhzMode::Extract);
    report.pulses = std::move(ghz.pulses);
    report.ghz_phases.push_back(*ghz.phases);
    notify(options.observer, "twist", s);

    PulseLog log(s, report.pulses);
    log({PulseKind::CZ, 0.0, {0, options.cz_partner}});
    notify(options.observer, "phase_gate", s);

    // Completes one full period of the collective pulse.
    log({PulseKind::Jx2, 2 * kPi - kPi / 2, appended});
    notify(options.observer, "untwist", s);

    const double chi = protocol1_residual_phase(n_appended);
    report.residual_phase = chi;
    report.measured_residual_phase = readback_phase(s, l);
    LogicalAmplitudes phased{l.alpha, l.beta * std::polar(1.0, chi)};
    if (max_deviation(s, repetition_codeword(phased, n_appended + 1)) >
        kProtocolDeviation) {
        throw ProtocolFailure("protocol 1 did not reach the repetition word");
    }

    LogicalAmplitudes target = l;
    if (options.fix_phase) {
        log({PulseKind::Rz, wrap_phase(-chi + options.extra_fixup_phase), {0}});
        target.beta *= std::polar(1.0, options.extra_fixup_phase);
        notify(options.observer, "fixup", s);
    } else {
        target = phased;
    }
    report.fidelity_to_target =
        fidelity(s, repetition_codeword(target, n_appended + 1));
    finish_report(report);
    return {std::move(s), std::move(report)};
}

// --- Protocol 2 ----------------------------------------------------------

double protocol2_relative_phase(unsigned n_appended) {
    const GhzPhasePair g = ghz_phases_closed_form(n_appended + 1, 0);
    return wrap_phase(g.phase1 - g.phase0);
}

double protocol2_quoted_phase(unsigned n_appended) {
    return wrap_phase((n_appended + 1) * kPi / 2);
}

Protocol2Result encode_protocol2(const LogicalAmplitudes &l,
                                 unsigned n_appended,
                                 const Protocol2Options &options) {
    if (n_appended < 3 || n_appended % 2 == 0) {
        throw std::invalid_argument(
            "protocol 2 needs an odd number (>= 3) of appended qubits, got " +
            std::to_string(n_appended));
    }
    StateVector s = from_logical(l, n_appended);
    notify(options.observer, "initial", s);

    std::vector<PulseSpec> shared;
    const std::vector<Qubit> everything = qubit_range(0, n_appended);
    const std::vector<Qubit> appended = qubit_range(1, n_appended);
    PulseLog(s, shared)({PulseKind::Jx2, kPi / 2, everything});
    notify(options.observer, "twist", s);

    Protocol2Result result{s, {}};
    const double phi = protocol2_relative_phase(n_appended);

    auto process = [&](StateVector branch, const MeasurementRecord &m) {
        EncodingReport report;
        report.protocol = Protocol::P2;
        report.n_appended = n_appended;
        report.pulses = shared;
        report.pulses.push_back({PulseKind::MeasureZ, 0.0, {0}});
        report.measurement = m;
        report.logical_block = appended;
        report.ghz_phases.push_back(ghz_phases_closed_form(n_appended + 1, 0));

        PulseLog log(branch, report.pulses);
        double residual = phi;
        if (m.outcome == 1) {
            if (options.correction == OutcomeOneCorrection::FlipAll) {
                log({PulseKind::X, 0.0, appended});
            } else {
                log({PulseKind::Jx2, kPi, appended});
            }
            // The exchange moves the phased word from |1...1> to |0...0>.
            residual = wrap_phase(-phi);
        }
        notify(options.observer, m.outcome == 0 ? "branch0" : "branch1",
               branch);
        report.residual_phase = residual;
        report.measured_residual_phase =
            readback_phase(drop_qubit(branch, 0, m.outcome), l);

        if (options.fix_phase) {
            log({PulseKind::Rz, wrap_phase(-residual), {appended.front()}});
            notify(options.observer, "fixup", branch);
        }
        StateVector logical = drop_qubit(branch, 0, m.outcome);
        LogicalAmplitudes target = l;
        if (!options.fix_phase) {
            target.beta *= std::polar(1.0, residual);
        }
        report.fidelity_to_target =
            fidelity(logical, repetition_codeword(target, n_appended));
        finish_report(report);
        result.branches.push_back({m.outcome, m.probability, std::move(branch),
                                   std::move(logical), std::move(report)});
    };

    switch (options.branch.kind) {
    case BranchKind::Sampled: {
        StateVector branch = s;
        const MeasurementRecord m = measure_z(branch, 0, options.branch.sample);
        process(std::move(branch), m);
        break;
    }
    case BranchKind::Forced0:
    case BranchKind::Forced1: {
        StateVector branch = s;
        const int outcome = options.branch.kind == BranchKind::Forced0 ? 0 : 1;
        const MeasurementRecord m = project_z(branch, 0, outcome);
        process(std::move(branch), m);
        break;
    }
    case BranchKind::Both:
        for (int outcome : {0, 1}) {
            StateVector branch = s;
            const MeasurementRecord m = project_z(branch, 0, outcome);
            process(std::move(branch), m);
        }
        break;
    }
    return result;
}

// --- CNOT baseline -------------------------------------------------------

Encoded encode_cnot_baseline(const LogicalAmplitudes &l, unsigned n_appended) {
    StateVector s = from_logical(l, n_appended);
    EncodingReport report;
    report.protocol = Protocol::CnotBaseline;
    report.n_appended = n_appended;
    report.logical_block = qubit_range(0, n_appended);
    PulseLog log(s, report.pulses);
    for (Qubit j = 1; j <= n_appended; ++j) {
        log({PulseKind::CNOT, 0.0, {0, j}});
    }
    report.residual_phase = 0.0;
    report.measured_residual_phase = readback_phase(s, l);
    report.fidelity_to_target =
        fidelity(s, repetition_codeword(l, n_appended + 1));
    finish_report(report);
    return {std::move(s), std::move(report)};
}

// --- Shor code -----------------------------------------------------------

std::pair<double, double> shor_triplet_gammas() noexcept {
    return {wrap_phase(derived::shor_triplet_zero_phase1 -
                       derived::shor_triplet_zero_phase0),
            wrap_phase(derived::shor_triplet_one_phase1 -
                       derived::shor_triplet_one_phase0)};
}

double shor_logical_phase() noexcept {
    // Three triplets each contribute the |000>-coefficient phase of their
    // input word.
    return wrap_phase(3.0 * (derived::shor_triplet_one_phase0 -
                             derived::shor_triplet_zero_phase0));
}

Encoded shor_encode(const LogicalAmplitudes &l, const ShorOptions &options) {
    require_normalized(l);
    constexpr unsigned kAppended = 8;
    const double logical_phase = shor_logical_phase();

    // The repetition stage pre-rotates the |1...1> word so the triplet
    // pulses leave no relative phase between the two logical words.
    Encoded stage = [&] {
        if (options.use_cnot_baseline) {
            Encoded e = encode_cnot_baseline(l, kAppended);
            PulseLog(e.state, e.report.pulses)(
                {PulseKind::Rz, wrap_phase(-logical_phase), {0}});
            return e;
        }
        Protocol1Options p1;
        p1.extra_fixup_phase = -logical_phase;
        return encode_protocol1(l, kAppended, p1);
    }();
    StateVector s = std::move(stage.state);
    EncodingReport report = std::move(stage.report);
    report.protocol = Protocol::Shor;
    report.residual_phase = logical_phase;
    report.ghz_phases = {
        {derived::shor_triplet_zero_phase0, derived::shor_triplet_zero_phase1},
        {derived::shor_triplet_one_phase0, derived::shor_triplet_one_phase1}};
    notify(options.observer, "repetition", s);

    for (const auto &triplet : kShorTriplets) {
        GhzPulseResult r = ghz_pulse(s, triplet, GhzMode::Raw);
        report.pulses.insert(report.pulses.end(), r.pulses.begin(),
                             r.pulses.end());
    }
    notify(options.observer, "triplets", s);

    const auto [gamma0, gamma1] = shor_triplet_gammas();
    if (1.0 - fidelity(s, shor_like_codeword(l, gamma0, gamma1)) >
        kProtocolDeviation) {
        throw ProtocolFailure("triplet pulses left the Shor code space");
    }

    if (options.fix_phase) {
        // Turns the |000> word's (|000> + e^{i g0}|111>) into |000> - |111>;
        // the |111> word (g1 = g0 + pi) lands on |000> + |111>.
        PulseLog(s, report.pulses)(
            {PulseKind::Rz, wrap_phase(kPi - gamma0), {0, 3, 6}});
        notify(options.observer, "fixup", s);
        report.fidelity_to_target = fidelity(s, shor_codeword(l));
    } else {
        report.fidelity_to_target =
            fidelity(s, shor_like_codeword(l, gamma0, gamma1));
    }
    report.logical_block = qubit_range(0, kAppended);
    finish_report(report);
    return {std::move(s), std::move(report)};
}

PulseSpec to_phase_basis(StateVector &s) {
    PulseSpec pulse{PulseKind::H, 0.0, qubit_range(0, s.n_qubits() - 1)};
    apply_pulse(s, pulse);
    return pulse;
}

} // namespace qenc
