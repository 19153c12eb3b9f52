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

#include "qenc/gates.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qenc {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_qubit(const StateVector &s, Qubit q) {
    if (q >= s.n_qubits()) {
        throw std::invalid_argument("qubit " + std::to_string(q) +
                                    " out of range for " +
                                    std::to_string(s.n_qubits()) +
                                    "-qubit state");
    }
}

void check_pair(const StateVector &s, Qubit a, Qubit b) {
    check_qubit(s, a);
    check_qubit(s, b);
    if (a == b) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits, got " +
                                    std::to_string(a) + " twice");
    }
}

// In-place Walsh-Hadamard butterfly over the target bits.
void hadamard_all(StateVector &s, std::span<const Qubit> targets) {
    auto amps = s.amplitudes();
    const std::size_t size = amps.size();
    for (Qubit q : targets) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t i = 0; i < size; ++i) {
            if ((i & bit) != 0) {
                continue;
            }
            const Complex a = amps[i];
            const Complex b = amps[i | bit];
            amps[i] = (a + b) * kInvSqrt2;
            amps[i | bit] = (a - b) * kInvSqrt2;
        }
    }
}

} // namespace

void validate_targets(const StateVector &s, std::span<const Qubit> targets) {
    if (targets.empty()) {
        throw std::invalid_argument("target set must be non-empty");
    }
    std::uint64_t seen = 0;
    for (Qubit q : targets) {
        check_qubit(s, q);
        const std::uint64_t bit = std::uint64_t{1} << q;
        if ((seen & bit) != 0) {
            throw std::invalid_argument("duplicate target qubit " +
                                        std::to_string(q));
        }
        seen |= bit;
    }
}

Matrix2 matrix_of(Gate1 gate) {
    const Complex i{0.0, 1.0};
    switch (gate.kind) {
    case Gate1Kind::H:
        return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case Gate1Kind::X:
        return {0.0, 1.0, 1.0, 0.0};
    case Gate1Kind::Y:
        return {0.0, -i, i, 0.0};
    case Gate1Kind::Z:
        return {1.0, 0.0, 0.0, -1.0};
    case Gate1Kind::Rz:
        return {1.0, 0.0, 0.0, std::polar(1.0, gate.phi)};
    }
    throw std::invalid_argument("unknown gate");
}

void apply_jx2(StateVector &s, double theta, std::span<const Qubit> targets) {
    validate_targets(s, targets);
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("pulse angle must be finite");
    }
    const auto k = static_cast<int>(targets.size());
    // m = (k - 2w) / 2 for w ones among the targets (Jz eigenvalue after the
    // basis change), so m^2 = (k - 2w)^2 / 4.
    std::vector<Complex> phase(static_cast<std::size_t>(k) + 1);
    for (int w = 0; w <= k; ++w) {
        const double twice_m = static_cast<double>(k - 2 * w);
        phase[static_cast<std::size_t>(w)] =
            std::polar(1.0, -theta * twice_m * twice_m / 4.0);
    }
    const std::uint64_t mask = StateVector::mask_of(targets);

    hadamard_all(s, targets);
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        amps[b] *= phase[static_cast<std::size_t>(std::popcount(b & mask))];
    }
    hadamard_all(s, targets);
}

void apply_jx(StateVector &s, double theta, std::span<const Qubit> targets) {
    validate_targets(s, targets);
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("pulse angle must be finite");
    }
    const double c = std::cos(theta / 2.0);
    const Complex mis{0.0, -std::sin(theta / 2.0)};
    const Matrix2 rx{c, mis, mis, c};
    for (Qubit q : targets) {
        apply_matrix_1q(s, q, rx);
    }
}

void apply_zz(StateVector &s, double theta, Qubit q1, Qubit q2) {
    check_pair(s, q1, q2);
    const Complex same = std::polar(1.0, -theta);
    const Complex differ = std::polar(1.0, theta);
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const bool parity = (((b >> q1) ^ (b >> q2)) & 1U) != 0;
        amps[b] *= parity ? differ : same;
    }
}

void apply_cz(StateVector &s, Qubit q1, Qubit q2) {
    check_pair(s, q1, q2);
    const std::size_t both = (std::size_t{1} << q1) | (std::size_t{1} << q2);
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if ((b & both) == both) {
            amps[b] = -amps[b];
        }
    }
}

void apply_cnot(StateVector &s, Qubit control, Qubit target) {
    check_pair(s, control, target);
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(amps[b], amps[b | tbit]);
        }
    }
}

void apply_matrix_1q(StateVector &s, Qubit qubit, const Matrix2 &m) {
    check_qubit(s, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        if ((b & bit) != 0) {
            continue;
        }
        const Complex a0 = amps[b];
        const Complex a1 = amps[b | bit];
        amps[b] = m[0] * a0 + m[1] * a1;
        amps[b | bit] = m[2] * a0 + m[3] * a1;
    }
}

void apply_1q(StateVector &s, Qubit qubit, Gate1 gate) {
    check_qubit(s, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    auto amps = s.amplitudes();
    switch (gate.kind) {
    case Gate1Kind::X:
        for (std::size_t b = 0; b < amps.size(); ++b) {
            if ((b & bit) == 0) {
                std::swap(amps[b], amps[b | bit]);
            }
        }
        return;
    case Gate1Kind::Z:
    case Gate1Kind::Rz: {
        const Complex factor = gate.kind == Gate1Kind::Z
                                   ? Complex{-1.0, 0.0}
                                   : std::polar(1.0, gate.phi);
        for (std::size_t b = 0; b < amps.size(); ++b) {
            if ((b & bit) != 0) {
                amps[b] *= factor;
            }
        }
        return;
    }
    case Gate1Kind::H:
    case Gate1Kind::Y:
        apply_matrix_1q(s, qubit, matrix_of(gate));
        return;
    }
}

double probability_one(const StateVector &s, Qubit qubit) {
    check_qubit(s, qubit);
    const std::size_t bit = std::size_t{1} << qubit;
    double p = 0.0;
    for (std::size_t b = 0; b < s.size(); ++b) {
        if ((b & bit) != 0) {
            p += std::norm(s[b]);
        }
    }
    return p;
}

namespace {

MeasurementRecord collapse(StateVector &s, Qubit qubit, int outcome,
                           double probability) {
    const std::size_t bit = std::size_t{1} << qubit;
    const double scale = 1.0 / std::sqrt(probability);
    auto amps = s.amplitudes();
    for (std::size_t b = 0; b < amps.size(); ++b) {
        const int value = (b & bit) != 0 ? 1 : 0;
        amps[b] = value == outcome ? amps[b] * scale : Complex{0.0, 0.0};
    }
    return {qubit, outcome, probability};
}

} // namespace

MeasurementRecord measure_z(StateVector &s, Qubit qubit, double sample) {
    const double p1 = probability_one(s, qubit);
    const double p0 = s.norm_squared() - p1;
    const int outcome = sample < p0 ? 0 : 1;
    const double p = outcome == 0 ? p0 : p1;
    if (p < kDegenerateBranchProbability) {
        // Only reachable with a sample outside [0, 1).
        throw DegenerateBranchError("measured branch has zero probability");
    }
    return collapse(s, qubit, outcome, p);
}

MeasurementRecord project_z(StateVector &s, Qubit qubit, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    const double p1 = probability_one(s, qubit);
    const double p = outcome == 1 ? p1 : s.norm_squared() - p1;
    if (p < kDegenerateBranchProbability) {
        throw DegenerateBranchError("forced outcome " + std::to_string(outcome) +
                                    " on qubit " + std::to_string(qubit) +
                                    " has probability " + std::to_string(p));
    }
    return collapse(s, qubit, outcome, p);
}

namespace {

constexpr std::pair<PulseKind, const char *> kPulseNames[] = {
    {PulseKind::Jx2, "Jx2"},
    {PulseKind::Jx, "Jx"},
    {PulseKind::CZ, "CZ"},
    {PulseKind::CNOT, "CNOT"},
    {PulseKind::H, "H"},
    {PulseKind::X, "X"},
    {PulseKind::Z, "Z"},
    {PulseKind::Rz, "Rz"},
    {PulseKind::MeasureZ, "MeasureZ"},
    {PulseKind::PauliStringParity, "PauliStringParity"},
};

} // namespace

std::string to_string(PulseKind kind) {
    for (const auto &[k, name] : kPulseNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

PulseKind pulse_kind_from_string(const std::string &name) {
    for (const auto &[k, n] : kPulseNames) {
        if (name == n) {
            return k;
        }
    }
    throw std::invalid_argument("unknown pulse kind '" + name + "'");
}

bool PulseSpec::is_entangling() const noexcept {
    return kind == PulseKind::Jx2 || kind == PulseKind::CZ ||
           kind == PulseKind::CNOT;
}

bool PulseSpec::is_measurement() const noexcept {
    return kind == PulseKind::MeasureZ || kind == PulseKind::PauliStringParity;
}

void apply_pulse(StateVector &s, const PulseSpec &pulse) {
    const auto need_two = [&] {
        if (pulse.targets.size() != 2) {
            throw std::invalid_argument(to_string(pulse.kind) +
                                        " pulse needs exactly two targets");
        }
    };
    switch (pulse.kind) {
    case PulseKind::Jx2:
        apply_jx2(s, pulse.theta, pulse.targets);
        return;
    case PulseKind::Jx:
        apply_jx(s, pulse.theta, pulse.targets);
        return;
    case PulseKind::CZ:
        need_two();
        apply_cz(s, pulse.targets[0], pulse.targets[1]);
        return;
    case PulseKind::CNOT:
        need_two();
        apply_cnot(s, pulse.targets[0], pulse.targets[1]);
        return;
    case PulseKind::H:
    case PulseKind::X:
    case PulseKind::Z:
    case PulseKind::Rz: {
        validate_targets(s, pulse.targets);
        Gate1 gate = pulse.kind == PulseKind::H   ? Gate1::h()
                     : pulse.kind == PulseKind::X ? Gate1::x()
                     : pulse.kind == PulseKind::Z ? Gate1::z()
                                                  : Gate1::rz(pulse.theta);
        for (Qubit q : pulse.targets) {
            apply_1q(s, q, gate);
        }
        return;
    }
    case PulseKind::MeasureZ:
    case PulseKind::PauliStringParity:
        throw std::invalid_argument(to_string(pulse.kind) +
                                    " is not a unitary pulse");
    }
}

} // namespace qenc
