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

#pragma once

#include <array>
#include <variant>

#include "hyperent/mode.hpp"
#include "hyperent/state.hpp"

namespace hyperent {

/// Birefringent delay of the quartz compensator per unit length (30 fs/mm).
inline constexpr double kQuartzDelayPerMeter = 30e-15 / 1e-3;

using JonesMatrix = std::array<std::array<Complex, 2>, 2>;

/// Linear retarder with the given retardance, fast axis at `axis` from H.
/// Retardance pi at axis pi/4 swaps H and V exactly.
JonesMatrix waveplate_jones(double retardance, double axis);

/// 2x2 single-photon transfer matrix of the 50/50 beamsplitter in the
/// symmetric convention; element [out_arm][in_arm].
JonesMatrix beamsplitter_matrix();

/// Waveplate acting on every spatial mode touched by `selector`.
TwoPhotonState apply_waveplate(const TwoPhotonState& state, const ModeSet& selector,
                               double retardance, double axis);

/// Each term gains exp(i * phi * n), n = number of its photons in `selector`.
TwoPhotonState apply_phase(const TwoPhotonState& state, const ModeSet& selector, double phi);

/// Adds tau to the delay of every photon in `selector`.
TwoPhotonState apply_delay(const TwoPhotonState& state, const ModeSet& selector, double tau);

/// Delays all V-polarized input photons by length * 30 fs/mm.
TwoPhotonState quartz_compensator(const TwoPhotonState& state, double length);

/// Removes every term with a photon in `selector`. No renormalization.
TwoPhotonState apply_blocker(const TwoPhotonState& state, const ModeSet& selector);

/// Maps input-stage modes to output-stage modes:
///   a1 -> (a1' + i a2')/sqrt2, a2 -> (i a1' + a2')/sqrt2, same for b.
/// Throws ErrorKind::invalid_stage if any photon is already at the output.
TwoPhotonState apply_beamsplitter(const TwoPhotonState& state);

namespace element {
struct Waveplate {
    ModeSet selector;
    double retardance = 0.0;
    double axis = 0.0;
    bool operator==(const Waveplate&) const = default;
};
struct PhaseShift {
    ModeSet selector;
    double phase = 0.0;
    bool operator==(const PhaseShift&) const = default;
};
struct Delay {
    ModeSet selector;
    double tau = 0.0;
    bool operator==(const Delay&) const = default;
};
struct Quartz {
    double length = 0.0;
    bool operator==(const Quartz&) const = default;
};
struct Blocker {
    ModeSet selector;
    bool operator==(const Blocker&) const = default;
};
struct BeamSplitter {
    bool operator==(const BeamSplitter&) const = default;
};
}  // namespace element

using ElementOp = std::variant<element::Waveplate, element::PhaseShift, element::Delay,
                               element::Quartz, element::Blocker, element::BeamSplitter>;

TwoPhotonState apply_element(const ElementOp& op, const TwoPhotonState& state);

}  // namespace hyperent
