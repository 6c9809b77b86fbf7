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

#include "hyperent/experiments.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hyperent/error.hpp"
#include "hyperent/oracle.hpp"

namespace hyperent {

namespace {

constexpr double kPi = std::numbers::pi;

/// Independent stream per (seed, curve, point).
std::uint64_t point_seed(std::uint64_t seed, std::uint32_t curve, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), curve,
                      static_cast<std::uint32_t>(index)};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

std::string describe(const char* what, double x) {
    std::ostringstream os;
    os << what << " at x=" << x;
    return os.str();
}

/// Evaluates `probability(x)` on every scan value, attaching Poisson counts
/// when requested.
template <typename Fn>
Curve build_curve(const Setup& setup, const ScanRange& range, std::uint32_t curve_id, const char* name,
                  Fn&& probability) {
    range.validate();
    const auto xs = range.values();
    Curve curve;
    curve.points.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        CurvePoint pt;
        pt.x = xs[i];
        try {
            pt.probability = probability(xs[i]);
            if (setup.counts)
                pt.counts = monte_carlo_counts(pt.probability, setup.mean_pairs, point_seed(setup.seed, curve_id, i));
        } catch (const Error& e) {
            throw e.with_context(describe(name, xs[i]));
        }
        curve.points.push_back(pt);
    }
    return curve;
}

}  // namespace

void ScanRange::validate() const {
    if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
        throw Error(ErrorKind::invalid_parameter, "scan range must be finite");
    if (!(step > 0.0)) throw Error(ErrorKind::invalid_parameter, "scan step must be positive");
    if (stop < start) throw Error(ErrorKind::invalid_parameter, "scan stop must not precede start");
    if ((stop - start) / step > 1e7) throw Error(ErrorKind::invalid_parameter, "scan has too many points");
}

std::vector<double> ScanRange::values() const {
    validate();
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = start + static_cast<double>(i) * step;
    return xs;
}

ScanRange ScanRange::default_delay() { return {-150e-6, 150e-6, 2e-6}; }
ScanRange ScanRange::default_mirror() { return {0.0, 140e-6, 2e-6}; }
ScanRange ScanRange::default_phase() { return {0.0, 2.0 * kPi, kPi / 24.0}; }

TwoPhotonState prepare_state(const Setup& setup, const StateSpec& spec) {
    TwoPhotonState s = [&] {
        switch (spec.kind) {
            case StateKind::polarization:
                return make_polarization(spec.family, spec.theta, setup.polarization_pair, setup.source,
                                         setup.compensator_length);
            case StateKind::momentum: return make_momentum(spec.phi, setup.source);
            case StateKind::hyper: return make_hyper(spec.theta, spec.phi, setup.source, setup.compensator_length);
        }
        throw Error(ErrorKind::invalid_parameter, "unknown state kind");
    }();
    for (const auto& op : setup.elements) s = apply_element(op, s);
    return s;
}

double coincidence_at(const Setup& setup, const StateSpec& spec, double delta_x) {
    const TwoPhotonState s = prepare_state(setup, spec);
    const TwoPhotonState delayed = apply_delay(s, ModeSet::arm(Arm::two), delta_x / kSpeedOfLight);
    return coincidence_probability(apply_beamsplitter(delayed), setup.wiring);
}

Curve scan_delay(const Setup& setup, const ScanRange& range) {
    return build_curve(setup, range, 0, "scan_delay",
                       [&](double dx) { return coincidence_at(setup, setup.state, dx); });
}

Curve scan_mirror(const Setup& setup, const ScanRange& range) {
    if (setup.state.kind == StateKind::momentum)
        throw Error(ErrorKind::invalid_parameter, "scan_mirror needs a state with a polarization phase");
    return build_curve(setup, range, 1, "scan_mirror", [&](double dd) {
        StateSpec spec = setup.state;
        spec.theta = theta_from_mirror(dd, setup.source);
        return coincidence_at(setup, spec, 0.0);
    });
}

Curve scan_plate(const Setup& setup, const ScanRange& range) {
    if (setup.state.kind == StateKind::polarization)
        throw Error(ErrorKind::invalid_parameter, "scan_plate needs a state with a momentum phase");
    return build_curve(setup, range, 2, "scan_plate", [&](double phi) {
        StateSpec spec = setup.state;
        spec.phi = phi;
        return coincidence_at(setup, spec, 0.0);
    });
}

std::pair<Curve, Curve> scan_hyper(const Setup& setup, const ScanRange& range) {
    auto curve_for = [&](double theta, std::uint32_t id) {
        return build_curve(setup, range, id, "scan_hyper", [&](double phi) {
            const StateSpec spec{StateKind::hyper, BellFamily::psi, theta, phi};
            return coincidence_at(setup, spec, 0.0);
        });
    };
    return {curve_for(0.0, 3), curve_for(kPi, 4)};
}

Curve scan_pol_correlation(const Setup& setup, double angle1, const ScanRange& range) {
    return build_curve(setup, range, 5, "pol_correlation", [&](double angle2) {
        return polarization_correlation(prepare_state(setup, setup.state), angle1, angle2);
    });
}

bool FalsificationReport::all_passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

FalsificationReport falsification_suite(const Setup& setup, const ScanRange& range) {
    Setup base = setup;
    base.state = StateSpec{StateKind::momentum, BellFamily::psi, 0.0, 0.0};

    struct Case {
        const char* name;
        ModeSet blocked;
        bool expect_flat_quarter;
    };
    const SpatialMode a1{Path::a, Arm::one, Stage::input};
    const SpatialMode a2{Path::a, Arm::two, Stage::input};
    const SpatialMode b1{Path::b, Arm::one, Stage::input};
    const SpatialMode b2{Path::b, Arm::two, Stage::input};
    const Case cases[] = {
        {"block_a1_b2", ModeSet::spatial({a1, b2}), true},
        {"block_a2_b1", ModeSet::spatial({a2, b1}), true},
        {"block_a1_a2", ModeSet::spatial({a1, a2}), false},
        {"block_b1_b2", ModeSet::spatial({b1, b2}), false},
    };

    FalsificationReport report;
    report.control_visibility = dip_visibility(scan_delay(base, range));
    for (const auto& c : cases) {
        Setup blocked = base;
        blocked.elements.push_back(element::Blocker{c.blocked});
        FalsificationCheck check;
        check.name = c.name;
        check.blocked = c.blocked;
        check.curve = scan_delay(blocked, range);
        check.max_probability = check.curve.max_probability();
        double sum = 0.0;
        for (const auto& p : check.curve.points) sum += p.probability;
        check.mean_probability = sum / static_cast<double>(check.curve.points.size());
        check.visibility = check.max_probability > 0.0 ? visibility(check.curve) : 0.0;
        if (c.expect_flat_quarter)
            check.passed = check.visibility < 0.01 && std::abs(check.mean_probability - 0.25) < 1e-9;
        else
            check.passed = check.max_probability < 1e-12;
        report.checks.push_back(std::move(check));
    }
    return report;
}

OracleReport oracle_check(const SourceParams& params, int random_states, std::uint64_t seed) {
    OracleReport report;
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) {
            const double theta = 2.0 * kPi * i / 12.0;
            const double phi = 2.0 * kPi * j / 12.0;
            const TwoPhotonState s = make_hyper(theta, phi, params, 0.018);
            const double fast = coincidence_probability(apply_beamsplitter(s));
            const double slow = brute_force_coincidence(s);
            const double law = 0.5 * (1.0 - params.v_pol * params.v_mom * std::cos(theta) * std::cos(phi));
            report.max_grid_law_error = std::max(report.max_grid_law_error, std::abs(fast - law));
            report.max_grid_oracle_error = std::max(report.max_grid_oracle_error, std::abs(fast - slow));
            ++report.grid_points;
        }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < random_states; ++k) {
        const TwoPhotonState s = random_four_term_state(rng, params.sigma_t, k % 2 == 0);
        const double fast = coincidence_probability(apply_beamsplitter(s));
        const double slow = brute_force_coincidence(s);
        report.max_random_oracle_error = std::max(report.max_random_oracle_error, std::abs(fast - slow));
        ++report.random_states;
    }
    return report;
}

}  // namespace hyperent
