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

#include <random>

#include "hyperent/detection.hpp"
#include "hyperent/state.hpp"

namespace hyperent {

/// Coincidence probability of an input-stage state computed the slow way:
/// the state is expanded in the symmetric two-photon basis over
/// (8 modes x orthonormalized temporal functions), the beamsplitter acts as an
/// explicit dense unitary on that basis, and squared magnitudes are summed
/// over coincidence basis vectors. With all delays equal the basis has 36
/// elements. Branch coherence is handled by an explicit environment factor.
///
/// Only the default polarization-insensitive wiring style is supported.
double brute_force_coincidence(const TwoPhotonState& input_state, const DetectorWiring& wiring = {});

/// Normalized state with four random terms over the input modes, random
/// complex amplitudes, branches, delays (multiples of sigma_t/2) and coherence.
/// With `zero_delays` all photons sit at delay 0.
TwoPhotonState random_four_term_state(std::mt19937_64& rng, double sigma_t, bool zero_delays);

}  // namespace hyperent
