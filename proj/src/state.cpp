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

#include "hyperent/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

double snap_delay(double d) {
    const double snapped = std::nearbyint(d / kDelayResolution) * kDelayResolution;
    return snapped == 0.0 ? 0.0 : snapped;  // no negative zero
}

auto term_key(const TwoPhotonTerm& t) {
    return std::tie(t.photon_a, t.photon_b, t.branch);
}

void check_sigma(double sigma_t) {
    if (!(sigma_t > 0.0) || !std::isfinite(sigma_t))
        throw Error(ErrorKind::invalid_parameter,
                    "sigma_t must be positive and finite, got " + std::to_string(sigma_t));
}

Complex photon_overlap(const PhotonOccupation& x, const PhotonOccupation& y, double sigma_t) {
    if (x.mode != y.mode) return 0.0;
    return temporal_overlap(x.delay, y.delay, sigma_t);
}

}  // namespace

double temporal_overlap(double d1, double d2, double sigma_t) {
    check_sigma(sigma_t);
    const double dt = d1 - d2;
    return std::exp(-dt * dt / (8.0 * sigma_t * sigma_t));
}

std::vector<TwoPhotonTerm> canonicalize(std::vector<TwoPhotonTerm> terms) {
    for (auto& t : terms) {
        if (!std::isfinite(t.photon_a.delay) || !std::isfinite(t.photon_b.delay))
            throw Error(ErrorKind::invalid_parameter, "photon delay must be finite");
        t.photon_a.delay = snap_delay(t.photon_a.delay);
        t.photon_b.delay = snap_delay(t.photon_b.delay);
        if (t.photon_b < t.photon_a) std::swap(t.photon_a, t.photon_b);
    }
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& x, const auto& y) { return term_key(x) < term_key(y); });

    std::vector<TwoPhotonTerm> merged;
    merged.reserve(terms.size());
    for (const auto& t : terms) {
        if (!merged.empty() && term_key(merged.back()) == term_key(t))
            merged.back().amplitude += t.amplitude;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const auto& t) { return std::abs(t.amplitude) < kAmplitudeCutoff; });
    return merged;
}

TwoPhotonState::TwoPhotonState(double sigma_t, Coherence coherence,
                               std::vector<TwoPhotonTerm> terms)
    : sigma_t_(sigma_t), coherence_(coherence), terms_(canonicalize(std::move(terms))) {
    check_sigma(sigma_t);
    for (double v : {coherence.v_pol, coherence.v_mom})
        if (!(v >= 0.0 && v <= 1.0))
            throw Error(ErrorKind::invalid_parameter, "coherence weights must lie in [0, 1]");
}

TwoPhotonState TwoPhotonState::scaled(Complex factor) const {
    auto terms = terms_;
    for (auto& t : terms) t.amplitude *= factor;
    return with_terms(std::move(terms));
}

TwoPhotonState TwoPhotonState::operator+(const TwoPhotonState& other) const {
    if (other.sigma_t_ != sigma_t_ || !(other.coherence_ == coherence_))
        throw Error(ErrorKind::incompatible_state, "cannot add states with different sigma_t or coherence");
    auto terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return with_terms(std::move(terms));
}

double TwoPhotonState::norm2() const { return inner_product(*this, *this).real(); }

Complex inner_product(const TwoPhotonState& x, const TwoPhotonState& y) {
    if (x.sigma_t() != y.sigma_t())
        throw Error(ErrorKind::incompatible_state, "inner product of states with different sigma_t");
    if (!(x.coherence() == y.coherence()))
        throw Error(ErrorKind::incompatible_state, "inner product of states with different coherence");
    const double sigma = x.sigma_t();
    Complex sum = 0.0;
    for (const auto& tx : x.terms()) {
        for (const auto& ty : y.terms()) {
            const double w = x.coherence().overlap(tx.branch, ty.branch);
            if (w == 0.0) continue;
            const Complex perm =
                photon_overlap(tx.photon_a, ty.photon_a, sigma) * photon_overlap(tx.photon_b, ty.photon_b, sigma) +
                photon_overlap(tx.photon_a, ty.photon_b, sigma) * photon_overlap(tx.photon_b, ty.photon_a, sigma);
            sum += std::conj(tx.amplitude) * ty.amplitude * w * perm;
        }
    }
    return sum;
}

TwoPhotonState normalize(const TwoPhotonState& x) {
    const double n2 = x.norm2();
    if (x.empty() || !(n2 > 0.0))
        throw Error(ErrorKind::zero_state, "cannot normalize a zero state");
    return x.scaled(1.0 / std::sqrt(n2));
}

TwoPhotonState single_term(double sigma_t, PhotonOccupation p, PhotonOccupation q,
                           Complex amplitude, Branch branch) {
    return TwoPhotonState(sigma_t, {}, {TwoPhotonTerm{p, q, amplitude, branch}});
}

}  // namespace hyperent
