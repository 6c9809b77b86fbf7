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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperent/detection.hpp"
#include "hyperent/elements.hpp"
#include "hyperent/error.hpp"
#include "hyperent/source.hpp"
#include "test_support.hpp"

namespace hyperent {
namespace {

using testing::at;
using testing::in;
using testing::kPi;

const SourceParams kIdeal = SourceParams::ideal();
const double kSig = kIdeal.sigma_t;

TwoPhotonState ket(std::initializer_list<std::pair<std::pair<Mode, Mode>, Complex>> terms) {
    std::vector<TwoPhotonTerm> out;
    for (const auto& [modes, amp] : terms) out.push_back({at(modes.first), at(modes.second), amp, {}});
    return TwoPhotonState(kSig, {}, out);
}

/// |<x|y>|^2 ignoring branch labels (ideal coherence makes them irrelevant).
double fidelity(const TwoPhotonState& x, const TwoPhotonState& y) {
    auto strip = [](const TwoPhotonState& s) {
        std::vector<TwoPhotonTerm> t(s.terms().begin(), s.terms().end());
        for (auto& term : t) term.branch = {};
        return TwoPhotonState(s.sigma_t(), {}, t);
    };
    return std::norm(inner_product(strip(x), strip(y)));
}

const Mode a1H = in(Path::a, Arm::one, Pol::H), a1V = in(Path::a, Arm::one, Pol::V);
const Mode a2H = in(Path::a, Arm::two, Pol::H), a2V = in(Path::a, Arm::two, Pol::V);
const Mode b1H = in(Path::b, Arm::one, Pol::H), b1V = in(Path::b, Arm::one, Pol::V);
const Mode b2H = in(Path::b, Arm::two, Pol::H), b2V = in(Path::b, Arm::two, Pol::V);

TEST(Mirror, ThetaIsLinearInDisplacement) {
    EXPECT_NEAR(theta_from_mirror(35e-6, kIdeal), kPi, 1e-15);
    EXPECT_NEAR(theta_from_mirror(70e-6, kIdeal), 2 * kPi, 1e-15);
    EXPECT_EQ(theta_from_mirror(0.0, kIdeal), 0.0);
}

TEST(SigmaT, CalibratedToSixtyMicronDip) {
    EXPECT_NEAR(kSig, 60e-6 / kSpeedOfLight / (4.0 * std::sqrt(std::log(2.0))), 1e-30);
    EXPECT_NEAR(kSig * 1e15, 60.0977, 1e-4);
}

TEST(BellStates, CompensatedSourceGivesTheFourBellStates) {
    const double r = 1.0 / std::sqrt(2.0);
    const struct {
        BellState which;
        TwoPhotonState expected;
    } cases[] = {
        {BellState::phi_plus, ket({{{a1H, a2H}, r}, {{a1V, a2V}, r}})},
        {BellState::phi_minus, ket({{{a1H, a2H}, r}, {{a1V, a2V}, -r}})},
        {BellState::psi_plus, ket({{{a1H, a2V}, r}, {{a1V, a2H}, r}})},
        {BellState::psi_minus, ket({{{a1H, a2V}, r}, {{a1V, a2H}, -r}})},
    };
    for (const auto& c : cases) {
        const auto s = make_bell_pol(c.which, {}, kIdeal, 0.018);
        EXPECT_NEAR(fidelity(s, c.expected), 1.0, 1e-12) << static_cast<int>(c.which);
        EXPECT_NEAR(s.norm2(), 1.0, 1e-12);
    }
}

TEST(BellStates, WalkoffLeavesPairsTemporallyDistinct) {
    const auto s = make_bell_pol(BellState::phi_plus, {}, kIdeal);
    ASSERT_EQ(s.terms().size(), 2u);
    EXPECT_EQ(s.terms()[0].photon_a.delay, 0.0);
    EXPECT_NEAR(s.terms()[1].photon_a.delay, -540e-15, 1e-21);
    EXPECT_NEAR(s.terms()[1].photon_b.delay, -540e-15, 1e-21);
}

TEST(BellStates, WalkoffRoundTrip) {
    const auto direct = quartz_compensator(make_polarization(BellFamily::phi, 0.3, {}, kIdeal), 0.018);
    const auto via_arg = make_polarization(BellFamily::psi, 0.3, {}, kIdeal, 0.018);
    for (const auto* s : {&direct, &via_arg})
        for (const auto& t : s->terms()) {
            EXPECT_LT(std::abs(t.photon_a.delay), 1e-18);
            EXPECT_LT(std::abs(t.photon_b.delay), 1e-18);
        }
}

TEST(BellStates, PhiMinusAnalyzersAtFortyFive) {
    SourceParams p = kIdeal;
    const auto ideal = make_bell_pol(BellState::phi_minus, {}, p, 0.018);
    EXPECT_NEAR(polarization_correlation(ideal, kPi / 4, kPi / 4), 0.0, 1e-15);
    EXPECT_NEAR(polarization_correlation(ideal, kPi / 4, -kPi / 4), 0.5, 1e-15);
    p.v_pol = 0.8;
    const auto partial = make_bell_pol(BellState::phi_minus, {}, p, 0.018);
    EXPECT_NEAR(polarization_correlation(partial, kPi / 4, kPi / 4), 0.05, 1e-15);
}

TEST(BellStates, RejectsPairsNotSpanningBothArms) {
    const SpatialPair same_arm{{Path::a, Arm::one, Stage::input}, {Path::b, Arm::one, Stage::input}};
    try {
        make_polarization(BellFamily::psi, 0.0, same_arm, kIdeal);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_wiring);
    }
    const SpatialPair output{{Path::a, Arm::one, Stage::output}, {Path::a, Arm::two, Stage::input}};
    EXPECT_THROW(make_polarization(BellFamily::phi, 0.0, output, kIdeal), Error);
}

TEST(BellStates, AlternativePairUsesTheGivenModes) {
    const SpatialPair pair{{Path::b, Arm::one, Stage::input}, {Path::a, Arm::two, Stage::input}};
    const double r = 1.0 / std::sqrt(2.0);
    const auto s = make_bell_pol(BellState::psi_plus, pair, kIdeal, 0.018);
    EXPECT_NEAR(fidelity(s, ket({{{b1H, a2V}, r}, {{b1V, a2H}, r}})), 1.0, 1e-12);
}

TEST(Momentum, TwoPathTerms) {
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(fidelity(make_momentum(0.0, kIdeal), ket({{{a1H, b2H}, r}, {{b1H, a2H}, r}})), 1.0, 1e-15);
    EXPECT_NEAR(fidelity(make_momentum(kPi, kIdeal), ket({{{a1H, b2H}, r}, {{b1H, a2H}, -r}})), 1.0, 1e-15);
    const auto s = make_momentum(0.4, kIdeal);
    EXPECT_EQ(s.coherence().v_mom, 1.0);
    EXPECT_EQ(make_momentum(0.4, SourceParams{}).coherence().v_mom, 0.82);
}

TEST(Hyper, FourTermsWithQuarterProbabilities) {
    const double theta = 0.7, phi = -1.1;
    const auto s = make_hyper(theta, phi, kIdeal, 0.018);
    const auto expected = ket({{{a1H, b2V}, 0.5},
                               {{a1V, b2H}, 0.5 * std::polar(1.0, theta)},
                               {{b1H, a2V}, 0.5 * std::polar(1.0, phi)},
                               {{b1V, a2H}, 0.5 * std::polar(1.0, theta + phi)}});
    EXPECT_NEAR(fidelity(s, expected), 1.0, 1e-12);
    ASSERT_EQ(s.terms().size(), 4u);
    for (const auto& t : s.terms()) EXPECT_NEAR(std::abs(t.amplitude), 0.5, 1e-15);
}

TEST(Hyper, FactorizesIntoPolarizationAndMomentum) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        SourceParams p;
        p.v_pol = unit(rng);
        p.v_mom = unit(rng);
        const double theta = angle(rng), phi = angle(rng);
        const double got = coincidence_probability(apply_beamsplitter(make_hyper(theta, phi, p, 0.018)));
        EXPECT_NEAR(got, 0.5 * (1.0 - p.v_pol * p.v_mom * std::cos(theta) * std::cos(phi)), 1e-12);
        // Direct tensor product of the factors, compensated afterwards.
        const auto product = tensor_by_arm(make_polarization(BellFamily::phi, theta, {}, p),
                                           make_momentum(phi, p));
        const auto hyper = apply_waveplate(quartz_compensator(product, 0.018), ModeSet::arm(Arm::two), kPi, kPi / 4);
        EXPECT_NEAR(coincidence_probability(apply_beamsplitter(hyper)), got, 1e-14);
    }
}

TEST(Hyper, PeriodicInBothPhases) {
    for (double theta : {0.0, 0.5, 2.0})
        for (double phi : {0.0, 1.0, 3.0}) {
            const double p0 = coincidence_probability(apply_beamsplitter(make_hyper(theta, phi, kIdeal, 0.018)));
            const double p1 =
                coincidence_probability(apply_beamsplitter(make_hyper(theta + 2 * kPi, phi - 2 * kPi, kIdeal, 0.018)));
            EXPECT_NEAR(p0, p1, 1e-12);
        }
}

TEST(Hyper, UncompensatedWalkoffWashesOutPolarizationInterference) {
    const double p = coincidence_probability(apply_beamsplitter(make_hyper(0.0, 0.0, kIdeal)));
    // Only the momentum interference survives: 1/2 (1 - v cos theta cos phi) with v ~ 0.
    EXPECT_NEAR(p, 0.5, 1e-6);
}

TEST(Ensemble, EqualMixOfPsiPlusAndMinusIsHalf) {
    const auto plus = apply_beamsplitter(make_bell_pol(BellState::psi_plus, {}, kIdeal, 0.018));
    const auto minus = apply_beamsplitter(make_bell_pol(BellState::psi_minus, {}, kIdeal, 0.018));
    EXPECT_NEAR(coincidence_probability(plus), 0.0, 1e-12);
    EXPECT_NEAR(coincidence_probability(minus), 1.0, 1e-12);
    EXPECT_NEAR(coincidence_probability(mixture({{0.5, plus}, {0.5, minus}})), 0.5, 1e-12);
}

TEST(Ensemble, DephasedAdmixtureMatchesCoherenceKnob) {
    // 0.87 of an ideal state mixed with 0.13 of a fully dephased one.
    SourceParams dephased = kIdeal;
    dephased.v_pol = 0.0;
    const auto pure = apply_beamsplitter(make_bell_pol(BellState::psi_minus, {}, kIdeal, 0.018));
    const auto flat = apply_beamsplitter(make_bell_pol(BellState::psi_minus, {}, dephased, 0.018));
    const double mixed = coincidence_probability(mixture({{0.87, pure}, {0.13, flat}}));
    SourceParams knob = kIdeal;
    knob.v_pol = 0.87;
    const auto direct = apply_beamsplitter(make_bell_pol(BellState::psi_minus, {}, knob, 0.018));
    EXPECT_NEAR(mixed, 0.5 * (1.0 + 0.87), 1e-12);
    EXPECT_NEAR(coincidence_probability(direct), mixed, 1e-12);
}

TEST(Ensemble, RejectsBadWeights) {
    const auto s = make_momentum(0.0, kIdeal);
    EXPECT_THROW(mixture({{0.5, s}, {0.4, s}}), Error);
    EXPECT_THROW(mixture({{1.5, s}, {-0.5, s}}), Error);
    EXPECT_THROW(mixture({}), Error);
    EXPECT_EQ(Ensemble(s).components().size(), 1u);
}

TEST(SourceParams, Validation) {
    SourceParams p;
    EXPECT_NO_THROW(p.validate());
    p.v_pol = 1.2;
    EXPECT_THROW(p.validate(), Error);
    p = {};
    p.lambda_p = 400e-9;
    EXPECT_THROW(p.validate(), Error);
    p = {};
    p.mirror_period = 0.0;
    EXPECT_THROW(make_momentum(0.0, p), Error);
}

}  // namespace
}  // namespace hyperent
