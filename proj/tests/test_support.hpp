// Copyright 2026 The hyperent Authors
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

// Shared generators and helpers for the unit tests.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "hyperent/elements.hpp"
#include "hyperent/oracle.hpp"
#include "hyperent/source.hpp"
#include "hyperent/state.hpp"

namespace hyperent::testing {

inline constexpr double kPi = std::numbers::pi;
inline const double kSigma = SourceParams{}.sigma_t;

inline Mode in(Path p, Arm a, Pol pol) { return Mode{p, a, pol, Stage::input}; }
inline Mode out(Path p, Arm a, Pol pol) { return Mode{p, a, pol, Stage::output}; }

inline PhotonOccupation at(Mode m, double delay = 0.0) { return PhotonOccupation{m, delay}; }

/// Random normalized state of up to `max_terms` input-stage terms with
/// random branches, coherence and delays.
inline TwoPhotonState random_state(std::mt19937_64& rng, int max_terms = 6) {
    std::uniform_int_distribution<int> mode_dist(0, 7);
    std::uniform_int_distribution<int> count_dist(1, max_terms);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss;
    const auto inputs = input_modes();
    const Coherence coherence{unit(rng), unit(rng)};
    std::vector<TwoPhotonTerm> terms;
    const int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
        TwoPhotonTerm t;
        t.photon_a = {inputs[static_cast<std::size_t>(mode_dist(rng))], (unit(rng) - 0.5) * 4.0 * kSigma};
        t.photon_b = {inputs[static_cast<std::size_t>(mode_dist(rng))], (unit(rng) - 0.5) * 4.0 * kSigma};
        t.amplitude = {gauss(rng), gauss(rng)};
        t.branch = {static_cast<std::uint8_t>(bit(rng)), static_cast<std::uint8_t>(bit(rng))};
        terms.push_back(t);
    }
    TwoPhotonState s(kSigma, coherence, terms);
    if (s.norm2() < 1e-6) return random_state(rng, max_terms);
    return normalize(s);
}

inline ModeSet random_selector(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> bit(0, 1);
    ModeSet s;
    for (const auto& m : input_modes())
        if (bit(rng)) s.insert(m);
    return s;
}

}  // namespace hyperent::testing
