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

#include "qenc/codes.hpp"

#include "qenc/codewords.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace qenc {

namespace {

constexpr double kAxisTolerance = 1e-12;

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_double(const std::string &s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("bad number '" + s + "'");
    }
    return v;
}

} // namespace

// --- errors --------------------------------------------------------------

std::string to_string(const ErrorSpec &e) {
    switch (e.kind) {
    case ErrorKind::X:
        return "X:" + std::to_string(e.qubit);
    case ErrorKind::Y:
        return "Y:" + std::to_string(e.qubit);
    case ErrorKind::Z:
        return "Z:" + std::to_string(e.qubit);
    case ErrorKind::Unitary: {
        char buf[160];
        std::snprintf(buf, sizeof buf, "U:%u:%.17g:%.17g:%.17g:%.17g", e.qubit,
                      e.theta, e.axis[0], e.axis[1], e.axis[2]);
        return buf;
    }
    }
    return "?";
}

ErrorSpec parse_error_spec(std::string_view text) {
    const auto parts = split(text, ':');
    try {
        if (parts.size() == 2 && parts[0].size() == 1) {
            const auto q = static_cast<Qubit>(std::stoul(parts[1]));
            switch (parts[0][0]) {
            case 'X':
                return ErrorSpec::pauli(q, ErrorKind::X);
            case 'Y':
                return ErrorSpec::pauli(q, ErrorKind::Y);
            case 'Z':
                return ErrorSpec::pauli(q, ErrorKind::Z);
            default:
                break;
            }
        } else if (parts.size() == 6 && parts[0] == "U") {
            return ErrorSpec::unitary(
                static_cast<Qubit>(std::stoul(parts[1])), parse_double(parts[2]),
                {parse_double(parts[3]), parse_double(parts[4]),
                 parse_double(parts[5])});
        }
    } catch (const std::logic_error &) {
    }
    throw std::invalid_argument("cannot parse error spec '" +
                                std::string(text) + "'");
}

Matrix2 error_matrix(const ErrorSpec &e) {
    switch (e.kind) {
    case ErrorKind::X:
        return matrix_of(Gate1::x());
    case ErrorKind::Y:
        return matrix_of(Gate1::y());
    case ErrorKind::Z:
        return matrix_of(Gate1::z());
    case ErrorKind::Unitary: {
        const auto &[nx, ny, nz] = e.axis;
        const double norm = std::sqrt(nx * nx + ny * ny + nz * nz);
        if (std::abs(norm - 1.0) > kAxisTolerance) {
            throw std::invalid_argument("error axis must have unit norm");
        }
        const double c = std::cos(e.theta / 2);
        const double s = std::sin(e.theta / 2);
        const Complex i{0.0, 1.0};
        // cos(t/2) I - i sin(t/2) (n . sigma)
        return {c - i * s * nz, -i * s * Complex{nx, -ny},
                -i * s * Complex{nx, ny}, c + i * s * nz};
    }
    }
    throw std::invalid_argument("unknown error kind");
}

void apply_error(StateVector &s, const ErrorSpec &e) {
    apply_matrix_1q(s, e.qubit, error_matrix(e));
}

// --- Pauli strings -------------------------------------------------------

PauliString::PauliString(std::string_view letters) : letters_(letters) {
    for (char c : letters_) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("Pauli letters must be I, X, Y or Z");
        }
    }
}

PauliString PauliString::on(unsigned n_qubits, std::span<const Qubit> qubits,
                            char letter) {
    std::string letters(n_qubits, 'I');
    for (Qubit q : qubits) {
        if (q >= n_qubits) {
            throw std::invalid_argument("Pauli qubit out of range");
        }
        letters[q] = letter;
    }
    return PauliString(letters);
}

unsigned PauliString::weight() const noexcept {
    unsigned w = 0;
    for (char c : letters_) {
        w += c != 'I' ? 1U : 0U;
    }
    return w;
}

void apply_pauli_string(StateVector &s, const PauliString &p) {
    if (p.size() != s.n_qubits()) {
        throw std::invalid_argument("Pauli string length " +
                                    std::to_string(p.size()) +
                                    " does not match " +
                                    std::to_string(s.n_qubits()) + " qubits");
    }
    for (Qubit q = 0; q < p.size(); ++q) {
        switch (p[q]) {
        case 'X':
            apply_1q(s, q, Gate1::x());
            break;
        case 'Y':
            apply_1q(s, q, Gate1::y());
            break;
        case 'Z':
            apply_1q(s, q, Gate1::z());
            break;
        default:
            break;
        }
    }
}

namespace {

struct ParityBranches {
    StateVector plus;
    StateVector minus;
    double p_plus;
    double p_minus;
};

/// (I +- P)/2 applied to s.
ParityBranches split_parity(const StateVector &s, const PauliString &p) {
    if (p.weight() == 0) {
        throw std::invalid_argument("cannot measure the identity string");
    }
    StateVector flipped = s;
    apply_pauli_string(flipped, p);
    StateVector plus = s;
    StateVector minus = s;
    double p_plus = 0.0;
    double p_minus = 0.0;
    for (std::size_t b = 0; b < s.size(); ++b) {
        plus[b] = 0.5 * (s[b] + flipped[b]);
        minus[b] = 0.5 * (s[b] - flipped[b]);
        p_plus += std::norm(plus[b]);
        p_minus += std::norm(minus[b]);
    }
    return {std::move(plus), std::move(minus), p_plus, p_minus};
}

ParityOutcome take_branch(StateVector &s, ParityBranches &br, int eigenvalue) {
    const double p = eigenvalue == 1 ? br.p_plus : br.p_minus;
    if (p < kDegenerateBranchProbability) {
        throw DegenerateBranchError("parity eigenvalue " +
                                    std::to_string(eigenvalue) +
                                    " has zero probability");
    }
    s = eigenvalue == 1 ? std::move(br.plus) : std::move(br.minus);
    const double scale = 1.0 / std::sqrt(p);
    for (Complex &a : s.amplitudes()) {
        a *= scale;
    }
    return {eigenvalue, p};
}

} // namespace

ParityOutcome measure_pauli_parity(StateVector &s, const PauliString &p,
                                   double sample) {
    ParityBranches br = split_parity(s, p);
    return take_branch(s, br, sample < br.p_plus ? 1 : -1);
}

ParityOutcome project_pauli_parity(StateVector &s, const PauliString &p,
                                   int eigenvalue) {
    if (eigenvalue != 1 && eigenvalue != -1) {
        throw std::invalid_argument("parity eigenvalue must be +1 or -1");
    }
    ParityBranches br = split_parity(s, p);
    return take_branch(s, br, eigenvalue);
}

bool SyndromeResult::trivial() const noexcept {
    for (const auto &r : parities) {
        if (r.eigenvalue != 1) {
            return false;
        }
    }
    return corrections.empty();
}

// --- repetition codes ----------------------------------------------------

namespace {

SyndromeResult correct_chain(StateVector &s, std::span<const Qubit> block,
                             Rng &rng, char check, char fix) {
    if (block.size() < 3) {
        throw std::invalid_argument("repetition block needs at least 3 qubits");
    }
    validate_targets(s, block);
    SyndromeResult result;
    // flipped[i]: qubit block[i] disagrees with block[0].
    std::vector<bool> flipped(block.size(), false);
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
        const Qubit pair[2] = {block[i], block[i + 1]};
        PauliString stab = PauliString::on(s.n_qubits(), pair, check);
        const ParityOutcome o = measure_pauli_parity(s, stab, rng.uniform());
        result.parities.push_back({std::move(stab), o.eigenvalue, o.probability});
        flipped[i + 1] = flipped[i] != (o.eigenvalue == -1);
    }
    const auto disagree = static_cast<std::size_t>(
        std::count(flipped.begin(), flipped.end(), true));
    const std::size_t agree = block.size() - disagree;
    if (disagree == agree) {
        // Balanced syndrome on an even block: no majority, leave it alone.
        return result;
    }
    const bool fix_disagreeing = disagree < agree;
    for (std::size_t i = 0; i < block.size(); ++i) {
        if (flipped[i] == fix_disagreeing) {
            result.corrections.push_back({block[i], fix});
        }
    }
    for (const Correction &c : result.corrections) {
        apply_1q(s, c.qubit, c.pauli == 'X' ? Gate1::x() : Gate1::z());
    }
    return result;
}

} // namespace

SyndromeResult repetition_correct(StateVector &s, std::span<const Qubit> block,
                                  Rng &rng) {
    return correct_chain(s, block, rng, 'Z', 'X');
}

SyndromeResult phase_repetition_correct(StateVector &s,
                                        std::span<const Qubit> block, Rng &rng) {
    return correct_chain(s, block, rng, 'X', 'Z');
}

// --- Shor code -----------------------------------------------------------

const std::vector<PauliString> &shor_stabilizers() {
    static const std::vector<PauliString> stabilizers{
        PauliString("ZZIIIIIII"), PauliString("IZZIIIIII"),
        PauliString("IIIZZIIII"), PauliString("IIIIZZIII"),
        PauliString("IIIIIIZZI"), PauliString("IIIIIIIZZ"),
        PauliString("XXXXXXIII"), PauliString("IIIXXXXXX"),
    };
    return stabilizers;
}

namespace {

/// Position flagged by two overlapping parity checks over three slots:
/// (-,+) -> 0, (-,-) -> 1, (+,-) -> 2, (+,+) -> none.
int locate(int first, int second) {
    if (first == -1) {
        return second == -1 ? 1 : 0;
    }
    return second == -1 ? 2 : -1;
}

} // namespace

SyndromeResult shor_correct(StateVector &s, Rng &rng) {
    if (s.n_qubits() != 9) {
        throw std::invalid_argument("Shor correction needs a 9-qubit state");
    }
    SyndromeResult result;
    std::vector<int> outcome;
    for (const PauliString &stab : shor_stabilizers()) {
        const ParityOutcome o = measure_pauli_parity(s, stab, rng.uniform());
        result.parities.push_back({stab, o.eigenvalue, o.probability});
        outcome.push_back(o.eigenvalue);
    }
    for (unsigned t = 0; t < 3; ++t) {
        const int where = locate(outcome[2 * t], outcome[2 * t + 1]);
        if (where >= 0) {
            result.corrections.push_back({3 * t + static_cast<Qubit>(where), 'X'});
        }
    }
    const int block = locate(outcome[6], outcome[7]);
    if (block >= 0) {
        result.corrections.push_back({3 * static_cast<Qubit>(block), 'Z'});
    }
    for (const Correction &c : result.corrections) {
        apply_1q(s, c.qubit, c.pauli == 'X' ? Gate1::x() : Gate1::z());
    }
    return result;
}

// --- scoring -------------------------------------------------------------

StateVector codeword(const Code &code, const LogicalAmplitudes &l) {
    switch (code.kind) {
    case CodeKind::Repetition:
        return repetition_codeword(l, code.n_qubits);
    case CodeKind::PhaseRepetition:
        return phase_codeword(l, code.n_qubits);
    case CodeKind::Shor:
        return shor_codeword(l);
    }
    throw std::invalid_argument("unknown code");
}

double logical_fidelity(const StateVector &s, const LogicalAmplitudes &l,
                        const Code &code) {
    if (s.n_qubits() != code.n_qubits) {
        throw std::invalid_argument("state has " + std::to_string(s.n_qubits()) +
                                    " qubits, code expects " +
                                    std::to_string(code.n_qubits));
    }
    return fidelity(codeword(code, l), s);
}

} // namespace qenc
