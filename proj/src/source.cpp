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

#include "hyperent/source.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hyperent/elements.hpp"
#include "hyperent/error.hpp"

namespace hyperent {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::invalid_parameter, what);
}

const PhotonOccupation& photon_in_arm(const TwoPhotonTerm& t, Arm arm) {
    const bool a_ok = t.photon_a.mode.arm == arm;
    const bool b_ok = t.photon_b.mode.arm == arm;
    if (a_ok == b_ok)
        throw Error(ErrorKind::invalid_wiring, "tensor_by_arm needs exactly one photon per arm");
    return a_ok ? t.photon_a : t.photon_b;
}

TwoPhotonState half_wave_swap(const TwoPhotonState& s, const ModeSet& modes) {
    return apply_waveplate(s, modes, std::numbers::pi, std::numbers::pi / 4.0);
}

}  // namespace

double sigma_t_for_dip_fwhm(double fwhm_path) {
    return fwhm_path / kSpeedOfLight / (4.0 * std::sqrt(std::numbers::ln2));
}

SourceParams SourceParams::ideal() {
    SourceParams p;
    p.v_pol = 1.0;
    p.v_mom = 1.0;
    return p;
}

void SourceParams::validate() const {
    require(lambda > 0.0 && lambda_p > 0.0, "wavelengths must be positive");
    require(std::abs(lambda - 2.0 * lambda_p) <= 1e-12 * lambda,
            "degenerate down-conversion requires lambda = 2 lambda_p");
    require(sigma_t > 0.0 && std::isfinite(sigma_t), "sigma_t must be positive");
    require(std::isfinite(walkoff), "walkoff must be finite");
    require(mirror_period > 0.0 && std::isfinite(mirror_period), "mirror_period must be positive");
    require(v_pol >= 0.0 && v_pol <= 1.0, "v_pol must lie in [0, 1]");
    require(v_mom >= 0.0 && v_mom <= 1.0, "v_mom must lie in [0, 1]");
}

double theta_from_mirror(double delta_d, const SourceParams& params) {
    return 2.0 * std::numbers::pi * delta_d / params.mirror_period;
}

TwoPhotonState make_polarization(BellFamily family, double theta, const SpatialPair& pair,
                                 const SourceParams& params, double compensator_length) {
    params.validate();
    if (pair.first.arm != Arm::one || pair.second.arm != Arm::two ||
        pair.first.stage != Stage::input || pair.second.stage != Stage::input)
        throw Error(ErrorKind::invalid_wiring,
                    "polarization pair must be one arm-1 and one arm-2 input mode, got " +
                        pair.first.name() + "," + pair.second.name());

    const double w = -params.walkoff;
    const TwoPhotonState phi_form(
        params.sigma_t, Coherence{params.v_pol, 1.0},
        {
            {{pair.first.with(Pol::H), 0.0}, {pair.second.with(Pol::H), 0.0}, kInvSqrt2, Branch{0, 0}},
            {{pair.first.with(Pol::V), w}, {pair.second.with(Pol::V), w},
             std::polar(kInvSqrt2, theta), Branch{1, 0}},
        });
    TwoPhotonState s = quartz_compensator(phi_form, compensator_length);
    if (family == BellFamily::psi) s = half_wave_swap(s, ModeSet::spatial({pair.second}));
    return s;
}

TwoPhotonState make_bell_pol(BellState which, const SpatialPair& pair, const SourceParams& params,
                             double compensator_length) {
    switch (which) {
        case BellState::phi_plus:
            return make_polarization(BellFamily::phi, 0.0, pair, params, compensator_length);
        case BellState::phi_minus:
            return make_polarization(BellFamily::phi, std::numbers::pi, pair, params, compensator_length);
        case BellState::psi_plus:
            return make_polarization(BellFamily::psi, 0.0, pair, params, compensator_length);
        case BellState::psi_minus:
            return make_polarization(BellFamily::psi, std::numbers::pi, pair, params, compensator_length);
    }
    throw Error(ErrorKind::invalid_parameter, "unknown Bell state");
}

TwoPhotonState make_momentum(double phi, const SourceParams& params) {
    params.validate();
    const Mode a1{Path::a, Arm::one, Pol::H, Stage::input};
    const Mode a2{Path::a, Arm::two, Pol::H, Stage::input};
    const Mode b1{Path::b, Arm::one, Pol::H, Stage::input};
    const Mode b2{Path::b, Arm::two, Pol::H, Stage::input};
    return TwoPhotonState(params.sigma_t, Coherence{1.0, params.v_mom},
                          {
                              {{a1, 0.0}, {b2, 0.0}, kInvSqrt2, Branch{0, 0}},
                              {{b1, 0.0}, {a2, 0.0}, std::polar(kInvSqrt2, phi), Branch{0, 1}},
                          });
}

TwoPhotonState tensor_by_arm(const TwoPhotonState& pol_factor, const TwoPhotonState& path_factor) {
    if (pol_factor.sigma_t() != path_factor.sigma_t())
        throw Error(ErrorKind::incompatible_state, "tensor factors have different sigma_t");
    std::vector<TwoPhotonTerm> terms;
    for (const auto& tp : pol_factor.terms()) {
        for (const auto& tq : path_factor.terms()) {
            TwoPhotonTerm t;
            PhotonOccupation* slots[2] = {&t.photon_a, &t.photon_b};
            for (Arm arm : {Arm::one, Arm::two}) {
                const auto& p = photon_in_arm(tp, arm);
                const auto& q = photon_in_arm(tq, arm);
                *slots[static_cast<int>(arm)] =
                    PhotonOccupation{Mode{q.mode.path, arm, p.mode.pol, Stage::input}, p.delay + q.delay};
            }
            t.amplitude = tp.amplitude * tq.amplitude;
            t.branch = Branch{tp.branch.pol, tq.branch.mom};
            terms.push_back(t);
        }
    }
    return TwoPhotonState(pol_factor.sigma_t(),
                          Coherence{pol_factor.coherence().v_pol, path_factor.coherence().v_mom},
                          std::move(terms));
}

TwoPhotonState make_hyper(double theta, double phi, const SourceParams& params,
                          double compensator_length) {
    const TwoPhotonState phi_form =
        tensor_by_arm(make_polarization(BellFamily::phi, theta, SpatialPair{}, params), make_momentum(phi, params));
    return half_wave_swap(quartz_compensator(phi_form, compensator_length), ModeSet::arm(Arm::two));
}

Ensemble::Ensemble(std::vector<std::pair<double, TwoPhotonState>> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw Error(ErrorKind::invalid_parameter, "empty mixture");
    double sum = 0.0;
    for (const auto& [w, s] : components_) {
        (void)s;
        if (!(w >= 0.0)) throw Error(ErrorKind::invalid_parameter, "mixture weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw Error(ErrorKind::invalid_parameter, "mixture weights sum to " + std::to_string(sum) + ", not 1");
}

Ensemble::Ensemble(TwoPhotonState pure) : components_{{1.0, std::move(pure)}} {}

Ensemble mixture(std::vector<std::pair<double, TwoPhotonState>> components) {
    return Ensemble(std::move(components));
}

}  // namespace hyperent
