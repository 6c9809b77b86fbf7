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

#include "hyperent/error.hpp"
#include "hyperent/state.hpp"
#include "test_support.hpp"

namespace hyperent {
namespace {

using testing::at;
using testing::in;
using testing::kSigma;

// Overlap of two Gaussian amplitude envelopes with intensity RMS sigma, by
// midpoint quadrature.
double numeric_overlap(double d1, double d2, double sigma) {
    const double norm = 1.0 / std::sqrt(std::sqrt(2.0 * testing::kPi) * sigma);
    auto env = [&](double t) { return norm * std::exp(-t * t / (4.0 * sigma * sigma)); };
    const double lo = std::min(d1, d2) - 20.0 * sigma;
    const double hi = std::max(d1, d2) + 20.0 * sigma;
    const int n = 200000;
    const double h = (hi - lo) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = lo + (i + 0.5) * h;
        sum += env(t - d1) * env(t - d2);
    }
    return sum * h;
}

TEST(TemporalOverlap, HalfAtHalfWidth) {
    const double dt = 2.0 * kSigma * std::sqrt(2.0 * std::log(2.0));
    EXPECT_NEAR(temporal_overlap(0.0, dt, kSigma), 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(temporal_overlap(1e-13, 1e-13, kSigma), 1.0);
}

TEST(TemporalOverlap, MatchesQuadrature) {
    for (double dt : {0.0, 30e-15, 120e-15, 540e-15}) {
        const double closed = temporal_overlap(0.0, dt, 60e-15);
        EXPECT_NEAR(closed, numeric_overlap(0.0, dt, 60e-15), 1e-9) << dt;
    }
    EXPECT_NEAR(temporal_overlap(0.0, 540e-15, 60e-15), std::exp(-540.0 * 540.0 / (8.0 * 3600.0)), 1e-18);
}

TEST(TemporalOverlap, RejectsNonPositiveSigma) {
    EXPECT_THROW(temporal_overlap(0, 0, 0.0), Error);
    EXPECT_THROW(temporal_overlap(0, 0, -1.0), Error);
}

TEST(InnerProduct, OrthogonalModes) {
    const auto x = single_term(kSigma, at(in(Path::a, Arm::one, Pol::H)), at(in(Path::b, Arm::two, Pol::H)));
    const auto y = single_term(kSigma, at(in(Path::a, Arm::one, Pol::V)), at(in(Path::b, Arm::two, Pol::H)));
    EXPECT_EQ(inner_product(x, y), Complex(0.0));
    EXPECT_NEAR(inner_product(x, x).real(), 1.0, 1e-15);
}

TEST(InnerProduct, DoublyOccupiedModeHasNormTwo) {
    const auto m = in(Path::a, Arm::one, Pol::H);
    EXPECT_NEAR(single_term(kSigma, at(m), at(m)).norm2(), 2.0, 1e-15);
    // Distinct delays in the same mode: 1 + overlap^2.
    const double ov = temporal_overlap(0, 100e-15, kSigma);
    EXPECT_NEAR(single_term(kSigma, at(m), at(m, 100e-15)).norm2(), 1.0 + ov * ov, 1e-15);
}

TEST(InnerProduct, ConjugateSymmetricAndSesquilinear) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto x = testing::random_state(rng);
        const auto other = testing::random_state(rng);
        const auto y = x.with_terms({other.terms().begin(), other.terms().end()});
        const Complex xy = inner_product(x, y);
        EXPECT_NEAR(std::abs(xy - std::conj(inner_product(y, x))), 0.0, 1e-14);
        const Complex c{0.3, -1.2};
        EXPECT_NEAR(std::abs(inner_product(x, y.scaled(c)) - c * xy), 0.0, 1e-13);
        EXPECT_NEAR(std::abs(inner_product(x.scaled(c), y) - std::conj(c) * xy), 0.0, 1e-13);
    }
}

TEST(InnerProduct, BranchCoherenceWeightsCrossTerms) {
    const auto p = at(in(Path::a, Arm::one, Pol::H));
    const auto q = at(in(Path::a, Arm::two, Pol::H));
    const TwoPhotonState x(kSigma, {0.4, 1.0}, {{p, q, 1.0, {0, 0}}});
    const TwoPhotonState y(kSigma, {0.4, 1.0}, {{p, q, 1.0, {1, 0}}});
    EXPECT_NEAR(inner_product(x, y).real(), 0.4, 1e-15);
}

TEST(InnerProduct, IncompatibleStatesThrow) {
    const auto p = at(in(Path::a, Arm::one, Pol::H));
    const auto q = at(in(Path::a, Arm::two, Pol::H));
    const auto x = single_term(kSigma, p, q);
    const auto y = single_term(2 * kSigma, p, q);
    const TwoPhotonState z(kSigma, {0.5, 1.0}, {{p, q, 1.0, {}}});
    EXPECT_THROW(inner_product(x, y), Error);
    EXPECT_THROW(inner_product(x, z), Error);
    try {
        (void)(x + z);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::incompatible_state);
    }
}

TEST(Normalize, UnitNormAndZeroState) {
    const auto p = at(in(Path::a, Arm::one, Pol::H));
    const auto q = at(in(Path::a, Arm::two, Pol::V));
    const auto s = single_term(kSigma, p, q, Complex(3.0, 4.0));
    EXPECT_NEAR(normalize(s).norm2(), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(normalize(s).terms()[0].amplitude), 1.0, 1e-15);
    try {
        normalize(TwoPhotonState(kSigma));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::zero_state);
    }
}

TEST(Canonicalize, MergesAndDropsCancellingTerms) {
    const auto p = at(in(Path::a, Arm::one, Pol::H));
    const auto q = at(in(Path::b, Arm::two, Pol::V));
    // Photon order within a term does not matter.
    const TwoPhotonState s(kSigma, {}, {{p, q, 0.5, {}}, {q, p, 0.25, {}}});
    ASSERT_EQ(s.terms().size(), 1u);
    EXPECT_NEAR(s.terms()[0].amplitude.real(), 0.75, 1e-16);
    const TwoPhotonState gone(kSigma, {}, {{p, q, 1.0, {}}, {q, p, -1.0, {}}});
    EXPECT_TRUE(gone.empty());
    // Different branches stay separate.
    const TwoPhotonState two(kSigma, {}, {{p, q, 1.0, {0, 0}}, {p, q, 1.0, {1, 0}}});
    EXPECT_EQ(two.terms().size(), 2u);
}

TEST(Canonicalize, SnapsDelaysToGrid) {
    const auto m1 = in(Path::a, Arm::one, Pol::H);
    const auto m2 = in(Path::a, Arm::two, Pol::H);
    const TwoPhotonState s(kSigma, {}, {{at(m1, 1e-13 + 3e-23), at(m2), 1.0, {}}, {at(m1, 1e-13), at(m2), 1.0, {}}});
    ASSERT_EQ(s.terms().size(), 1u);
    EXPECT_NEAR(s.terms()[0].amplitude.real(), 2.0, 1e-15);
}

TEST(Canonicalize, Idempotent) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const auto s = testing::random_state(rng);
        std::vector<TwoPhotonTerm> once(s.terms().begin(), s.terms().end());
        const auto twice = canonicalize(once);
        ASSERT_EQ(once.size(), twice.size());
        for (std::size_t k = 0; k < once.size(); ++k) {
            EXPECT_EQ(once[k].photon_a, twice[k].photon_a);
            EXPECT_EQ(once[k].photon_b, twice[k].photon_b);
            EXPECT_EQ(once[k].amplitude, twice[k].amplitude);
            EXPECT_EQ(once[k].branch, twice[k].branch);
        }
    }
}

TEST(Norm, PositiveForRandomStates) {
    std::mt19937_64 rng(6);
    const auto inputs = input_modes();
    std::uniform_int_distribution<int> mode(0, 7);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        std::vector<TwoPhotonTerm> terms;
        for (int k = 0; k < 5; ++k)
            terms.push_back({at(inputs[mode(rng)], u(rng) * 1e-13), at(inputs[mode(rng)], u(rng) * 1e-13),
                             Complex(g(rng), g(rng)),
                             Branch{static_cast<std::uint8_t>(k & 1), static_cast<std::uint8_t>(k >> 1 & 1)}});
        const TwoPhotonState s(kSigma, {u(rng), u(rng)}, terms);
        if (!s.empty()) EXPECT_GT(s.norm2(), 0.0);
    }
}

TEST(State, RejectsInvalidConstruction) {
    EXPECT_THROW(TwoPhotonState(0.0), Error);
    EXPECT_THROW(TwoPhotonState(kSigma, {1.5, 1.0}), Error);
    const auto p = at(in(Path::a, Arm::one, Pol::H), std::nan(""));
    EXPECT_THROW(single_term(kSigma, p, p), Error);
}

}  // namespace
}  // namespace hyperent
