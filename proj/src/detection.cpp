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

#include "hyperent/detection.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

ModeSet all_output_modes() {
    ModeSet s;
    for (const auto& m : output_modes()) s.insert(m);
    return s;
}

void require_output_stage(const TwoPhotonState& state) {
    for (const auto& t : state.terms())
        for (const auto* p : {&t.photon_a, &t.photon_b})
            if (p->mode.stage != Stage::output)
                throw Error(ErrorKind::invalid_stage,
                            "detection expects output-stage photons, found " + p->mode.name());
}

/// Amplitude of a linear-polarization projection; `pass` false selects the
/// orthogonal outcome.
double analyzer_amplitude(Pol pol, double angle, bool pass) {
    if (pass) return pol == Pol::H ? std::cos(angle) : std::sin(angle);
    return pol == Pol::H ? -std::sin(angle) : std::cos(angle);
}

/// Projects a photon through an analyzer; the transmitted photon is relabeled
/// H so that amplitudes from H and V merge.
PhotonOccupation analyzed(PhotonOccupation p) {
    p.mode.pol = Pol::H;
    return p;
}

}  // namespace

void DetectorWiring::validate() const {
    if (!(side1 & side2).empty())
        throw Error(ErrorKind::invalid_wiring, "detector sides overlap");
    if (side1.empty() || side2.empty())
        throw Error(ErrorKind::invalid_wiring, "detector sides must be non-empty");
    const ModeSet out = all_output_modes();
    if (!side1.is_subset_of(out) || !side2.is_subset_of(out))
        throw Error(ErrorKind::invalid_wiring, "detectors can only watch output-stage modes");
}

double coincidence_probability(const TwoPhotonState& state, const DetectorWiring& wiring) {
    wiring.validate();
    require_output_stage(state);
    std::vector<TwoPhotonTerm> projected;
    for (const auto& t : state.terms()) {
        const bool a1 = wiring.side1.contains(t.photon_a.mode);
        const bool a2 = wiring.side2.contains(t.photon_a.mode);
        const bool b1 = wiring.side1.contains(t.photon_b.mode);
        const bool b2 = wiring.side2.contains(t.photon_b.mode);
        if (!((a1 && b2) || (a2 && b1))) continue;
        TwoPhotonTerm p = t;
        if (wiring.analyzers) {
            const auto [angle1, angle2] = *wiring.analyzers;
            const double fa = analyzer_amplitude(t.photon_a.mode.pol, a1 ? angle1 : angle2, true);
            const double fb = analyzer_amplitude(t.photon_b.mode.pol, b1 ? angle1 : angle2, true);
            p.amplitude *= fa * fb;
            p.photon_a = analyzed(p.photon_a);
            p.photon_b = analyzed(p.photon_b);
        }
        projected.push_back(p);
    }
    return std::max(0.0, state.with_terms(std::move(projected)).norm2());
}

double coincidence_probability(const Ensemble& ensemble, const DetectorWiring& wiring) {
    double p = 0.0;
    for (const auto& [w, s] : ensemble.components()) p += w * coincidence_probability(s, wiring);
    return p;
}

double same_side_probability(const TwoPhotonState& state, const ModeSet& side) {
    require_output_stage(state);
    std::vector<TwoPhotonTerm> projected;
    for (const auto& t : state.terms())
        if (side.contains(t.photon_a.mode) && side.contains(t.photon_b.mode)) projected.push_back(t);
    return std::max(0.0, state.with_terms(std::move(projected)).norm2());
}

double polarization_correlation(const TwoPhotonState& state, double angle1, double angle2, bool pass1,
                                bool pass2) {
    std::set<SpatialMode> used;
    for (const auto& t : state.terms()) {
        for (const auto* p : {&t.photon_a, &t.photon_b}) {
            if (p->mode.stage != Stage::input)
                throw Error(ErrorKind::invalid_stage, "polarization analysis expects input-stage photons");
            used.insert(spatial(p->mode));
        }
        if (spatial(t.photon_a.mode) == spatial(t.photon_b.mode))
            throw Error(ErrorKind::invalid_wiring, "both photons share spatial mode " + spatial(t.photon_a.mode).name());
    }
    if (used.size() != 2)
        throw Error(ErrorKind::invalid_wiring,
                    "polarization analysis needs exactly two spatial modes, state uses " + std::to_string(used.size()));
    const SpatialMode first = *used.begin();

    std::vector<TwoPhotonTerm> projected;
    for (const auto& t : state.terms()) {
        TwoPhotonTerm p = t;
        for (auto* photon : {&p.photon_a, &p.photon_b}) {
            const bool is_first = spatial(photon->mode) == first;
            p.amplitude *= analyzer_amplitude(photon->mode.pol, is_first ? angle1 : angle2, is_first ? pass1 : pass2);
            *photon = analyzed(*photon);
        }
        projected.push_back(p);
    }
    return std::max(0.0, state.with_terms(std::move(projected)).norm2());
}

std::uint64_t monte_carlo_counts(double p, double mean_pairs, std::uint64_t seed) {
    if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
        throw Error(ErrorKind::invalid_parameter, "probability outside [0, 1]: " + std::to_string(p));
    if (!(mean_pairs >= 0.0) || !std::isfinite(mean_pairs))
        throw Error(ErrorKind::invalid_parameter, "mean_pairs must be non-negative");
    const double mean = std::clamp(p, 0.0, 1.0) * mean_pairs;
    if (mean == 0.0) return 0;
    std::mt19937_64 rng(seed);
    std::poisson_distribution<std::uint64_t> poisson(mean);
    return poisson(rng);
}

double Curve::min_probability() const {
    if (points.empty()) throw Error(ErrorKind::invalid_parameter, "empty curve");
    return std::min_element(points.begin(), points.end(),
                            [](const auto& x, const auto& y) { return x.probability < y.probability; })
        ->probability;
}

double Curve::max_probability() const {
    if (points.empty()) throw Error(ErrorKind::invalid_parameter, "empty curve");
    return std::max_element(points.begin(), points.end(),
                            [](const auto& x, const auto& y) { return x.probability < y.probability; })
        ->probability;
}

double visibility(const Curve& curve) {
    const double lo = curve.min_probability();
    const double hi = curve.max_probability();
    if (!(hi + lo > 0.0)) throw Error(ErrorKind::invalid_parameter, "visibility undefined for an all-zero curve");
    return (hi - lo) / (hi + lo);
}

namespace {

struct DipShape {
    double baseline = 0.0;
    std::size_t extremum = 0;
    double depth = 0.0;  // signed: negative for a dip
};

DipShape dip_shape(const Curve& curve) {
    const auto& pts = curve.points;
    const std::size_t n = pts.size();
    if (n < 3) throw Error(ErrorKind::shape, "need at least three samples for a dip");

    const std::size_t wing = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(0.05 * static_cast<double>(n))));
    DipShape d;
    for (std::size_t i = 0; i < wing; ++i) d.baseline += pts[i].probability + pts[n - 1 - i].probability;
    d.baseline /= static_cast<double>(2 * wing);
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(pts[i].probability - d.baseline) > std::abs(pts[d.extremum].probability - d.baseline))
            d.extremum = i;
    d.depth = pts[d.extremum].probability - d.baseline;
    return d;
}

}  // namespace

double dip_visibility(const Curve& curve) {
    const DipShape d = dip_shape(curve);
    if (!(d.baseline > 0.0)) throw Error(ErrorKind::shape, "dip visibility undefined for a zero baseline");
    return std::abs(d.depth) / d.baseline;
}

double dip_fwhm(const Curve& curve) {
    const auto& pts = curve.points;
    const std::size_t n = pts.size();
    const DipShape shape = dip_shape(curve);
    const std::size_t ext = shape.extremum;
    const double depth = shape.depth;
    if (std::abs(depth) < 1e-12) throw Error(ErrorKind::shape, "curve has no dip or peak");
    const double baseline = shape.baseline;
    const double half = baseline + 0.5 * depth;
    // Positive inside the feature, negative outside.
    auto inside = [&](std::size_t i) { return (pts[i].probability - half) * (depth < 0 ? -1.0 : 1.0); };
    auto crossing = [&](std::size_t i, std::size_t j) {
        const double fi = inside(i);
        const double fj = inside(j);
        return pts[i].x + (pts[j].x - pts[i].x) * fi / (fi - fj);
    };

    std::optional<double> left;
    for (std::size_t i = ext; i > 0; --i)
        if (inside(i - 1) <= 0.0) {
            left = crossing(i, i - 1);
            break;
        }
    std::optional<double> right;
    for (std::size_t i = ext; i + 1 < n; ++i)
        if (inside(i + 1) <= 0.0) {
            right = crossing(i, i + 1);
            break;
        }
    if (!left || !right) throw Error(ErrorKind::shape, "curve does not reach half depth on both sides");
    return *right - *left;
}

}  // namespace hyperent
