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

#include <utility>
#include <vector>

#include "hyperent/mode.hpp"
#include "hyperent/state.hpp"

namespace hyperent {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Gaussian width that gives a coincidence dip of the given FWHM in optical
/// path difference. The dip envelope is exp(-tau^2 / (4 sigma_t^2)).
double sigma_t_for_dip_fwhm(double fwhm_path);

/// Source settings. Defaults reproduce the double-pass type-I BBO source:
/// 795 nm pairs from a 397.5 nm pump, 540 fs walk-off of the V-V cone,
/// 70 um mirror-displacement period and a 60 um coincidence dip.
struct SourceParams {
    double lambda = 795e-9;
    double lambda_p = 397.5e-9;
    double sigma_t = sigma_t_for_dip_fwhm(60e-6);
    double walkoff = 540e-15;
    double mirror_period = 70e-6;
    double v_pol = 0.87;
    double v_mom = 0.82;

    /// Filter bandwidth and coherence time, kept for reference only.
    double filter_bandwidth = 3e-9;
    double coherence_time = 400e-15;

    /// Same settings with both visibility knobs at 1.
    static SourceParams ideal();
    void validate() const;
    bool operator==(const SourceParams&) const = default;
};

/// Cavity and mask geometry. Recorded, never used by the state math.
struct SourceGeometry {
    double mirror_radius = 0.15;
    double ring_diameter = 0.016;
    double hole_diameter = 1.5e-3;
    double alpha = 0.17453292519943295;  // 10 deg
};

double theta_from_mirror(double delta_d, const SourceParams& params);

enum class BellFamily { phi, psi };
enum class BellState { phi_plus, phi_minus, psi_plus, psi_minus };

/// Arm-1 and arm-2 spatial modes carrying the two photons of a pair.
struct SpatialPair {
    SpatialMode first{Path::a, Arm::one, Stage::input};
    SpatialMode second{Path::a, Arm::two, Stage::input};

    bool operator==(const SpatialPair&) const = default;
};

/// (|H1,H2> + e^{i theta}|V1,V2>)/sqrt2 for the phi family,
/// (|H1,V2> + e^{i theta}|V1,H2>)/sqrt2 for psi, on the given spatial pair.
///
/// Both photons of the e^{i theta} branch (the V-V cone) are advanced by the
/// walk-off. `compensator_length` inserts the quartz plate directly at the
/// source output, before the half-wave plate that turns phi into psi.
TwoPhotonState make_polarization(BellFamily family, double theta, const SpatialPair& pair,
                                 const SourceParams& params, double compensator_length = 0.0);

TwoPhotonState make_bell_pol(BellState which, const SpatialPair& pair, const SourceParams& params,
                             double compensator_length = 0.0);

/// (|a1,b2> + e^{i phi}|b1,a2>)/sqrt2 on the H-polarized cone.
TwoPhotonState make_momentum(double phi, const SourceParams& params);

/// Photon j of the result takes its polarization from photon j of
/// `pol_factor` and its spatial mode from photon j of `path_factor`
/// (photons identified by arm). Delays add and amplitudes multiply.
TwoPhotonState tensor_by_arm(const TwoPhotonState& pol_factor, const TwoPhotonState& path_factor);

/// Polarization Psi(theta) times momentum psi(phi): the four terms
/// a1H b2V, e^{i theta} a1V b2H, e^{i phi} b1H a2V, e^{i(theta+phi)} b1V a2H,
/// each with amplitude 1/2.
TwoPhotonState make_hyper(double theta, double phi, const SourceParams& params,
                          double compensator_length = 0.0);

/// Convex mixture of pure states; observables are weight averages.
class Ensemble {
public:
    Ensemble(std::vector<std::pair<double, TwoPhotonState>> components);
    Ensemble(TwoPhotonState pure);

    const std::vector<std::pair<double, TwoPhotonState>>& components() const { return components_; }

private:
    std::vector<std::pair<double, TwoPhotonState>> components_;
};

/// Validates weights (non-negative, summing to 1 within 1e-9).
Ensemble mixture(std::vector<std::pair<double, TwoPhotonState>> components);

}  // namespace hyperent
