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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hyperent/detection.hpp"
#include "hyperent/elements.hpp"
#include "hyperent/source.hpp"

namespace hyperent {

enum class StateKind { polarization, momentum, hyper };

struct StateSpec {
    StateKind kind = StateKind::momentum;
    BellFamily family = BellFamily::psi;  // polarization states only
    double theta = 0.0;
    double phi = 0.0;

    bool operator==(const StateSpec&) const = default;
};

/// Evenly spaced scan values start, start+step, ... up to stop inclusive.
struct ScanRange {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    void validate() const;
    std::vector<double> values() const;
    bool operator==(const ScanRange&) const = default;

    static ScanRange default_delay();   // [-150, 150] um, 2 um
    static ScanRange default_mirror();  // [0, 140] um, 2 um
    static ScanRange default_phase();   // [0, 2 pi], pi/24
};

/// Everything needed to evaluate one interferometer configuration: source,
/// extra elements between source and beamsplitter, detectors and counting.
struct Setup {
    StateSpec state;
    SourceParams source;
    double compensator_length = 0.018;
    SpatialPair polarization_pair;
    std::vector<ElementOp> elements;
    DetectorWiring wiring;
    bool counts = false;
    double mean_pairs = 1e4;
    std::uint64_t seed = 0;
};

/// Source state followed by the element chain, before the path delay and BS.
TwoPhotonState prepare_state(const Setup& setup, const StateSpec& spec);

/// Full chain at one path difference: arm-2 delay delta_x / c, beamsplitter,
/// coincidence probability.
double coincidence_at(const Setup& setup, const StateSpec& spec, double delta_x);

Curve scan_delay(const Setup& setup, const ScanRange& range);
/// theta set from the mirror displacement; path difference 0.
Curve scan_mirror(const Setup& setup, const ScanRange& range);
/// phi scanned; path difference 0.
Curve scan_plate(const Setup& setup, const ScanRange& range);
/// Hyper-entangled state scanned in phi for theta = 0 and theta = pi.
std::pair<Curve, Curve> scan_hyper(const Setup& setup, const ScanRange& range);
/// Analyzer-1 fixed, analyzer-2 angle scanned, no beamsplitter.
Curve scan_pol_correlation(const Setup& setup, double angle1, const ScanRange& range);

struct FalsificationCheck {
    std::string name;
    ModeSet blocked;
    bool passed = false;
    double visibility = 0.0;  // 0 for an all-zero curve
    double mean_probability = 0.0;
    double max_probability = 0.0;
    Curve curve;
};

struct FalsificationReport {
    std::vector<FalsificationCheck> checks;
    double control_visibility = 0.0;  // dip_visibility of the unblocked scan

    bool all_passed() const;
};

/// Blocking tests on psi+: covering a correlated pair leaves a flat 1/4,
/// covering both holes of one arm-pair kills every coincidence.
FalsificationReport falsification_suite(const Setup& setup, const ScanRange& range);

struct OracleReport {
    int grid_points = 0;
    int random_states = 0;
    double max_grid_law_error = 0.0;      // fast path vs closed form
    double max_grid_oracle_error = 0.0;   // fast path vs brute force
    double max_random_oracle_error = 0.0;
};

/// Compares the fast path with the brute-force oracle on the 13x13 (theta, phi)
/// grid and on seeded random four-term states.
OracleReport oracle_check(const SourceParams& params, int random_states, std::uint64_t seed);

}  // namespace hyperent
