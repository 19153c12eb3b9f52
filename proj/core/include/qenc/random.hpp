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

#include "qenc/state_vector.hpp"

#include <array>
#include <cstdint>

namespace qenc {

/**
 * SplitMix64 stream. The n-th output is a pure function of (seed, n), so
 * per-trial streams seeded with trial_seed(master, index) give identical
 * results however trials are scheduled.
 */
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() noexcept;

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Standard normal (Box-Muller).
    double normal() noexcept;

    /// Haar-random normalized (alpha, beta).
    LogicalAmplitudes logical();

    /// Haar-random state over n qubits.
    StateVector state(unsigned n_qubits);

    /// Uniform point on the unit sphere.
    std::array<double, 3> unit_vector();

  private:
    std::uint64_t state_;
};

[[nodiscard]] std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

[[nodiscard]] std::uint64_t trial_seed(std::uint64_t master_seed,
                                       std::uint64_t trial_index) noexcept;

} // namespace qenc
