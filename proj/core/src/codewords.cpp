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

#include "qenc/codewords.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace qenc {

StateVector repetition_codeword(const LogicalAmplitudes &l, unsigned n_qubits) {
    StateVector s(n_qubits);
    s[0] = l.alpha;
    s[s.size() - 1] = l.beta;
    return s;
}

StateVector phase_codeword(const LogicalAmplitudes &l, unsigned n_qubits) {
    // |+...+> has every amplitude 2^{-n/2}; |-...-> carries (-1)^popcount.
    StateVector s(n_qubits);
    const double scale = std::pow(2.0, -0.5 * n_qubits);
    for (std::size_t b = 0; b < s.size(); ++b) {
        const double sign = (std::popcount(b) % 2 == 0) ? 1.0 : -1.0;
        s[b] = scale * (l.alpha + sign * l.beta);
    }
    return s;
}

StateVector shor_like_codeword(const LogicalAmplitudes &l, double gamma0,
                               double gamma1) {
    // Each triplet is (|000> + e^{ig}|111>)/sqrt2; the word is the product of
    // three, so a basis index contributes only when every triplet is uniform.
    StateVector s(9);
    s[0] = 0.0;
    const double scale = std::pow(0.5, 1.5);
    for (unsigned pattern = 0; pattern < 8; ++pattern) {
        std::size_t index = 0;
        int ones = 0;
        for (unsigned t = 0; t < 3; ++t) {
            if ((pattern >> t) & 1U) {
                index |= std::size_t{7} << (3 * t);
                ++ones;
            }
        }
        s[index] = scale * (l.alpha * std::polar(1.0, gamma0 * ones) +
                            l.beta * std::polar(1.0, gamma1 * ones));
    }
    return s;
}

StateVector shor_codeword(const LogicalAmplitudes &l) {
    return shor_like_codeword(l, std::numbers::pi, 0.0);
}

} // namespace qenc
