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

#include "hyperent/elements.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

struct Component {
    PhotonOccupation photon;
    Complex amplitude;
};

/// At most two outgoing single-photon components per incoming photon.
struct PhotonImage {
    std::array<Component, 2> parts{};
    int count = 0;

    void add(PhotonOccupation p, Complex a) {
        if (a != Complex(0.0)) parts[static_cast<std::size_t>(count++)] = {p, a};
    }
};

/// Applies a single-photon linear map to both photons of every term.
template <typename Map>
TwoPhotonState map_photons(const TwoPhotonState& state, Map&& map) {
    std::vector<TwoPhotonTerm> out;
    out.reserve(state.terms().size() * 4);
    for (const auto& t : state.terms()) {
        const PhotonImage ia = map(t.photon_a);
        const PhotonImage ib = map(t.photon_b);
        for (int i = 0; i < ia.count; ++i)
            for (int j = 0; j < ib.count; ++j) {
                const auto& pa = ia.parts[static_cast<std::size_t>(i)];
                const auto& pb = ib.parts[static_cast<std::size_t>(j)];
                out.push_back({pa.photon, pb.photon, t.amplitude * pa.amplitude * pb.amplitude, t.branch});
            }
    }
    return state.with_terms(std::move(out));
}

PhotonImage identity(const PhotonOccupation& p) {
    PhotonImage img;
    img.add(p, 1.0);
    return img;
}

}  // namespace

JonesMatrix waveplate_jones(double retardance, double axis) {
    const double c = std::cos(axis);
    const double s = std::sin(axis);
    const Complex e = std::polar(1.0, retardance);
    return {{{c * c + e * s * s, (1.0 - e) * c * s},
             {(1.0 - e) * c * s, s * s + e * c * c}}};
}

JonesMatrix beamsplitter_matrix() {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, r);
    return {{{r, i}, {i, r}}};
}

TwoPhotonState apply_waveplate(const TwoPhotonState& state, const ModeSet& selector,
                               double retardance, double axis) {
    const JonesMatrix j = waveplate_jones(retardance, axis);
    return map_photons(state, [&](const PhotonOccupation& p) {
        if (!selector.touches_spatial(p.mode)) return identity(p);
        const auto in = static_cast<std::size_t>(p.mode.pol);
        PhotonImage img;
        for (Pol out : {Pol::H, Pol::V}) {
            PhotonOccupation q = p;
            q.mode.pol = out;
            img.add(q, j[static_cast<std::size_t>(out)][in]);
        }
        return img;
    });
}

TwoPhotonState apply_phase(const TwoPhotonState& state, const ModeSet& selector, double phi) {
    const Complex factor = std::polar(1.0, phi);
    return map_photons(state, [&](const PhotonOccupation& p) {
        PhotonImage img;
        img.add(p, selector.contains(p.mode) ? factor : Complex(1.0));
        return img;
    });
}

TwoPhotonState apply_delay(const TwoPhotonState& state, const ModeSet& selector, double tau) {
    if (!std::isfinite(tau)) throw Error(ErrorKind::invalid_parameter, "delay must be finite");
    return map_photons(state, [&](const PhotonOccupation& p) {
        PhotonOccupation q = p;
        if (selector.contains(p.mode)) q.delay += tau;
        return identity(q);
    });
}

TwoPhotonState quartz_compensator(const TwoPhotonState& state, double length) {
    if (!(length >= 0.0) || !std::isfinite(length))
        throw Error(ErrorKind::invalid_parameter,
                    "quartz length must be non-negative, got " + std::to_string(length));
    return apply_delay(state, ModeSet::polarization(Pol::V, Stage::input), length * kQuartzDelayPerMeter);
}

TwoPhotonState apply_blocker(const TwoPhotonState& state, const ModeSet& selector) {
    std::vector<TwoPhotonTerm> kept;
    for (const auto& t : state.terms())
        if (!selector.contains(t.photon_a.mode) && !selector.contains(t.photon_b.mode))
            kept.push_back(t);
    return state.with_terms(std::move(kept));
}

TwoPhotonState apply_beamsplitter(const TwoPhotonState& state) {
    const JonesMatrix u = beamsplitter_matrix();
    return map_photons(state, [&](const PhotonOccupation& p) {
        if (p.mode.stage != Stage::input)
            throw Error(ErrorKind::invalid_stage,
                        "beamsplitter input photon already at output stage (" + p.mode.name() + ")");
        const auto in = static_cast<std::size_t>(p.mode.arm);
        PhotonImage img;
        for (Arm out : {Arm::one, Arm::two}) {
            PhotonOccupation q = p;
            q.mode.arm = out;
            q.mode.stage = Stage::output;
            img.add(q, u[static_cast<std::size_t>(out)][in]);
        }
        return img;
    });
}

TwoPhotonState apply_element(const ElementOp& op, const TwoPhotonState& state) {
    struct Visitor {
        const TwoPhotonState& s;
        TwoPhotonState operator()(const element::Waveplate& e) const {
            return apply_waveplate(s, e.selector, e.retardance, e.axis);
        }
        TwoPhotonState operator()(const element::PhaseShift& e) const {
            return apply_phase(s, e.selector, e.phase);
        }
        TwoPhotonState operator()(const element::Delay& e) const { return apply_delay(s, e.selector, e.tau); }
        TwoPhotonState operator()(const element::Quartz& e) const { return quartz_compensator(s, e.length); }
        TwoPhotonState operator()(const element::Blocker& e) const { return apply_blocker(s, e.selector); }
        TwoPhotonState operator()(const element::BeamSplitter&) const { return apply_beamsplitter(s); }
    };
    return std::visit(Visitor{state}, op);
}

}  // namespace hyperent
