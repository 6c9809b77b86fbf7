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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperent/mode.hpp"

namespace hyperent {

using Complex = std::complex<double>;

/// Amplitudes below this magnitude are dropped after merging.
inline constexpr double kAmplitudeCutoff = 1e-14;
/// Delays are stored on a grid of this resolution so that equal optical paths
/// reached by different floating-point routes merge.
inline constexpr double kDelayResolution = 1e-21;

/// Overlap of two Gaussian single-photon temporal amplitudes with RMS width
/// sigma_t shifted to d1 and d2: exp(-(d1-d2)^2 / (8 sigma_t^2)).
double temporal_overlap(double d1, double d2, double sigma_t);

/// One photon: the mode it occupies and the accumulated delay of its wavepacket.
struct PhotonOccupation {
    Mode mode;
    double delay = 0.0;

    auto operator<=>(const PhotonOccupation&) const = default;
};

/// Which source branch a term descends from. Terms from different branches
/// interfere with a reduced weight given by Coherence; the label survives all
/// linear optics.
struct Branch {
    std::uint8_t pol = 0;
    std::uint8_t mom = 0;

    auto operator<=>(const Branch&) const = default;
};

/// Interference weights between source branches: terms whose polarization
/// branch differs are weighted by v_pol, momentum branch by v_mom.
struct Coherence {
    double v_pol = 1.0;
    double v_mom = 1.0;

    double overlap(Branch x, Branch y) const {
        return (x.pol == y.pol ? 1.0 : v_pol) * (x.mom == y.mom ? 1.0 : v_mom);
    }
    bool operator==(const Coherence&) const = default;
};

/// amplitude * a^dag(photon_a) a^dag(photon_b) |0>, stored with
/// photon_a <= photon_b.
struct TwoPhotonTerm {
    PhotonOccupation photon_a;
    PhotonOccupation photon_b;
    Complex amplitude{0.0, 0.0};
    Branch branch;
};

/// Returns the canonical form of a term list: photons ordered within each
/// term, delays snapped, terms sorted, duplicates merged and negligible
/// amplitudes dropped.
std::vector<TwoPhotonTerm> canonicalize(std::vector<TwoPhotonTerm> terms);

/// Immutable superposition of two-photon terms. All photons share one
/// Gaussian temporal width sigma_t.
class TwoPhotonState {
public:
    explicit TwoPhotonState(double sigma_t, Coherence coherence = {},
                            std::vector<TwoPhotonTerm> terms = {});

    double sigma_t() const { return sigma_t_; }
    const Coherence& coherence() const { return coherence_; }
    std::span<const TwoPhotonTerm> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Same sigma_t and coherence, new term list.
    TwoPhotonState with_terms(std::vector<TwoPhotonTerm> terms) const {
        return TwoPhotonState(sigma_t_, coherence_, std::move(terms));
    }
    TwoPhotonState scaled(Complex factor) const;
    TwoPhotonState operator+(const TwoPhotonState& other) const;

    /// Squared norm, Re <x|x>.
    double norm2() const;

private:
    double sigma_t_;
    Coherence coherence_;
    std::vector<TwoPhotonTerm> terms_;
};

/// <x|y>, antilinear in x. Each term pair contributes the permanent of the
/// 2x2 single-photon overlap matrix times the branch coherence weight.
Complex inner_product(const TwoPhotonState& x, const TwoPhotonState& y);

/// Rescales to unit norm. Throws ErrorKind::zero_state for an empty or
/// vanishing state.
TwoPhotonState normalize(const TwoPhotonState& x);

/// Builds the one-term state amplitude * a^dag(p) a^dag(q) |0>.
TwoPhotonState single_term(double sigma_t, PhotonOccupation p, PhotonOccupation q,
                           Complex amplitude = 1.0, Branch branch = {});

}  // namespace hyperent
