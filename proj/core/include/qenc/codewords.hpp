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

namespace qenc {

/// alpha|0...0> + beta|1...1>.
[[nodiscard]] StateVector repetition_codeword(const LogicalAmplitudes &l,
                                              unsigned n_qubits);

/// alpha|+...+> + beta|-...->.
[[nodiscard]] StateVector phase_codeword(const LogicalAmplitudes &l,
                                         unsigned n_qubits);

/// alpha [(|000> + e^{i g0}|111>)/sqrt2]^{x3} +
/// beta  [(|000> + e^{i g1}|111>)/sqrt2]^{x3}.
/// Triplets are qubits {0,1,2}, {3,4,5}, {6,7,8}.
[[nodiscard]] StateVector shor_like_codeword(const LogicalAmplitudes &l,
                                             double gamma0, double gamma1);

/// Shor code word with the sign convention alpha -> (|000> - |111>),
/// beta -> (|000> + |111>).
[[nodiscard]] StateVector shor_codeword(const LogicalAmplitudes &l);

inline constexpr std::array<std::array<Qubit, 3>, 3> kShorTriplets{
    {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};

} // namespace qenc
