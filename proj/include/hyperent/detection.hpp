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
#include <optional>
#include <utility>
#include <vector>

#include "hyperent/mode.hpp"
#include "hyperent/source.hpp"
#include "hyperent/state.hpp"

namespace hyperent {

/// Two non-number-resolving detectors. Each side collects a set of output
/// modes; optional linear analyzers (angle from H) sit in front of them.
struct DetectorWiring {
    ModeSet side1 = ModeSet::spatial({{Path::a, Arm::one, Stage::output}, {Path::b, Arm::one, Stage::output}});
    ModeSet side2 = ModeSet::spatial({{Path::a, Arm::two, Stage::output}, {Path::b, Arm::two, Stage::output}});
    std::optional<std::pair<double, double>> analyzers;

    bool polarization_insensitive() const { return !analyzers.has_value(); }
    void validate() const;
    bool operator==(const DetectorWiring&) const = default;
};

/// Probability of one photon on each side after the beamsplitter. Bunched
/// outcomes count as no coincidence. Absolute: blocked amplitude is lost.
double coincidence_probability(const TwoPhotonState& state_after_bs, const DetectorWiring& wiring = {});
double coincidence_probability(const Ensemble& ensemble, const DetectorWiring& wiring = {});

/// Probability that both photons land in `side` (polarization-insensitive).
double same_side_probability(const TwoPhotonState& state_after_bs, const ModeSet& side);

/// Joint probability behind two linear analyzers without the beamsplitter.
/// The analyzer at `angle1` sees the photon in the lower-ordered spatial mode.
/// `pass1`/`pass2` select the transmitted or the orthogonal outcome.
double polarization_correlation(const TwoPhotonState& state_no_bs, double angle1, double angle2,
                                bool pass1 = true, bool pass2 = true);

/// Poisson count with mean p * mean_pairs, deterministic in `seed`.
std::uint64_t monte_carlo_counts(double p, double mean_pairs, std::uint64_t seed);

struct CurvePoint {
    double x = 0.0;
    double probability = 0.0;
    std::optional<std::uint64_t> counts;

    bool operator==(const CurvePoint&) const = default;
};

struct Curve {
    std::vector<CurvePoint> points;

    bool operator==(const Curve&) const = default;
    double min_probability() const;
    double max_probability() const;
};

/// (max - min) / (max + min) of the probabilities.
double visibility(const Curve& curve);

/// HOM-style visibility |extremum - baseline| / baseline, baseline as in
/// dip_fwhm. A dip to (1-v)/2 or a peak to (1+v)/2 on a 1/2 baseline gives v.
double dip_visibility(const Curve& curve);

/// Full width at half depth of the single dip or peak, with the baseline taken
/// as the mean of the outer 10% of samples and linear interpolation between
/// samples. Throws ErrorKind::shape if either half crossing is missing.
double dip_fwhm(const Curve& curve);

}  // namespace hyperent
