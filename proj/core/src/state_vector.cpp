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

#include "qenc/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qenc {

namespace {

void check_qubit_count(unsigned n) {
    if (n == 0 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n));
    }
}

} // namespace

StateVector::StateVector(unsigned n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    const std::size_t size = amps.size();
    if (size < 2 || !std::has_single_bit(size)) {
        throw std::invalid_argument(
            "amplitude count must be a power of two >= 2");
    }
    const auto n = static_cast<unsigned>(std::countr_zero(size));
    check_qubit_count(n);
    return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const Complex &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

std::uint64_t StateVector::mask_of(std::span<const Qubit> qubits) {
    std::uint64_t mask = 0;
    for (Qubit q : qubits) {
        mask |= std::uint64_t{1} << q;
    }
    return mask;
}

bool LogicalAmplitudes::is_normalized(double tol) const noexcept {
    return std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= tol;
}

void require_normalized(const LogicalAmplitudes &l) {
    if (!l.is_normalized()) {
        throw std::invalid_argument(
            "logical amplitudes must satisfy |alpha|^2 + |beta|^2 = 1");
    }
}

StateVector new_basis_state(unsigned n_qubits, std::string_view bits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("basis state needs at least one qubit");
    }
    if (bits.size() != n_qubits) {
        throw std::invalid_argument("bit string length " +
                                    std::to_string(bits.size()) +
                                    " does not match qubit count " +
                                    std::to_string(n_qubits));
    }
    std::vector<Complex> amps(std::size_t{1} << n_qubits);
    std::size_t index = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] == '1') {
            index |= std::size_t{1} << j;
        } else if (bits[j] != '0') {
            throw std::invalid_argument("bit string may only contain 0 and 1");
        }
    }
    amps[index] = 1.0;
    return StateVector::from_amplitudes(std::move(amps));
}

StateVector from_logical(const LogicalAmplitudes &l, unsigned n_appended) {
    if (n_appended == 0) {
        throw std::invalid_argument("at least one appended qubit is required");
    }
    require_normalized(l);
    StateVector s(n_appended + 1);
    s[0] = l.alpha;
    s[1] = l.beta;
    return s;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner product of states with " +
                                    std::to_string(a.n_qubits()) + " and " +
                                    std::to_string(b.n_qubits()) + " qubits");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::min(1.0, std::norm(inner_product(a, b)));
}

double max_deviation(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double max_deviation_up_to_phase(const StateVector &a, const StateVector &b) {
    const Complex overlap = inner_product(b, a);
    const double mag = std::abs(overlap);
    const Complex align = mag > 0.0 ? overlap / mag : Complex{1.0, 0.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - align * b[i]));
    }
    return worst;
}

StateVector drop_qubit(const StateVector &s, Qubit qubit, int value,
                       double tol) {
    if (qubit >= s.n_qubits() || s.n_qubits() < 2) {
        throw std::invalid_argument("cannot drop qubit " +
                                    std::to_string(qubit));
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t low = bit - 1;
    std::vector<Complex> out(s.size() / 2);
    double stray = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const bool set = (i & bit) != 0;
        if (set == (value != 0)) {
            out[(i & low) | ((i >> 1) & ~low)] = s[i];
        } else {
            stray += std::norm(s[i]);
        }
    }
    if (stray > tol) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) +
                                    " is not in a definite basis state");
    }
    return StateVector::from_amplitudes(std::move(out));
}

} // namespace qenc
