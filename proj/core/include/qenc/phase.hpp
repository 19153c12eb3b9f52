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

#include <cmath>
#include <numbers>

namespace qenc {

/// Maps an angle into (-pi, pi].
[[nodiscard]] inline double wrap_phase(double angle) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::remainder(angle, two_pi);
    if (r <= -std::numbers::pi) {
        r += two_pi;
    }
    return r;
}

/// Shortest distance between two angles on the circle.
[[nodiscard]] inline double phase_distance(double a, double b) noexcept {
    return std::abs(wrap_phase(a - b));
}

} // namespace qenc
