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

#include "qenc/random.hpp"

#include <cmath>
#include <numbers>

namespace qenc {

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed,
                         std::uint64_t trial_index) noexcept {
    return splitmix64_mix(master_seed ^
                          splitmix64_mix(trial_index + 0x9e3779b97f4a7c15ULL));
}

Rng::result_type Rng::operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64_mix(state_);
}

double Rng::uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double Rng::normal() noexcept {
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

LogicalAmplitudes Rng::logical() {
    Complex a{normal(), normal()};
    Complex b{normal(), normal()};
    const double norm = std::sqrt(std::norm(a) + std::norm(b));
    return {a / norm, b / norm};
}

StateVector Rng::state(unsigned n_qubits) {
    StateVector s(n_qubits);
    double total = 0.0;
    for (Complex &a : s.amplitudes()) {
        a = Complex{normal(), normal()};
        total += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(total);
    for (Complex &a : s.amplitudes()) {
        a *= scale;
    }
    return s;
}

std::array<double, 3> Rng::unit_vector() {
    for (;;) {
        std::array<double, 3> v{normal(), normal(), normal()};
        const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (n > 1e-9) {
            return {v[0] / n, v[1] / n, v[2] / n};
        }
    }
}

} // namespace qenc
