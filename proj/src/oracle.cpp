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

#include "hyperent/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "hyperent/error.hpp"

namespace hyperent {

namespace {

using Eigen::Index;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;

/// Mode number in [0, 8): path*4 + arm*2 + pol. Stage is implied by context.
int local_index(const Mode& m) {
    return static_cast<int>(m.path) * 4 + static_cast<int>(m.arm) * 2 + static_cast<int>(m.pol);
}

Mode output_mode(int local) {
    return Mode{static_cast<Path>(local / 4), static_cast<Arm>((local / 2) % 2), static_cast<Pol>(local % 2),
                Stage::output};
}

/// Rows are vectors whose pairwise dot products reproduce the Gram matrix.
RMatrix gram_factor(const RMatrix& gram) {
    Eigen::SelfAdjointEigenSolver<RMatrix> eig(gram);
    const auto& values = eig.eigenvalues();
    const double top = values.maxCoeff();
    std::vector<Index> kept;
    for (Index i = 0; i < values.size(); ++i)
        if (values(i) > 1e-13 * top) kept.push_back(i);
    RMatrix factor(gram.rows(), static_cast<Index>(kept.size()));
    for (Index c = 0; c < static_cast<Index>(kept.size()); ++c)
        factor.col(c) = eig.eigenvectors().col(kept[static_cast<std::size_t>(c)]) *
                        std::sqrt(values(kept[static_cast<std::size_t>(c)]));
    return factor;
}

/// Symmetric two-photon basis |i,j>, i <= j, over n single-photon states.
struct SymmetricBasis {
    Index n;
    Index dim() const { return n * (n + 1) / 2; }
    Index index(Index i, Index j) const {
        if (i > j) std::swap(i, j);
        return i * n - i * (i - 1) / 2 + (j - i);
    }
};

/// Single-photon beamsplitter on the 8 local modes, input -> output.
CMatrix beamsplitter_unitary() {
    const double r = 1.0 / std::sqrt(2.0);
    CMatrix u = CMatrix::Zero(8, 8);
    for (int path = 0; path < 2; ++path)
        for (int pol = 0; pol < 2; ++pol) {
            const int m1 = path * 4 + 0 * 2 + pol;
            const int m2 = path * 4 + 1 * 2 + pol;
            u(m1, m1) = r;
            u(m2, m1) = Complex(0.0, r);
            u(m1, m2) = Complex(0.0, r);
            u(m2, m2) = r;
        }
    return u;
}

/// Lifts a single-photon unitary to the symmetric two-photon space.
CMatrix two_photon_unitary(const CMatrix& u, const SymmetricBasis& basis) {
    const Index n = basis.n;
    const double sqrt2 = std::sqrt(2.0);
    CMatrix u2 = CMatrix::Zero(basis.dim(), basis.dim());
    for (Index i = 0; i < n; ++i)
        for (Index j = i; j < n; ++j) {
            const double in_norm = i == j ? sqrt2 : 1.0;
            const Index col = basis.index(i, j);
            for (Index k = 0; k < n; ++k)
                for (Index l = k; l < n; ++l) {
                    Complex c = k == l ? u(k, i) * u(k, j) * sqrt2 : u(k, i) * u(l, j) + u(l, i) * u(k, j);
                    if (c != Complex(0.0)) u2(basis.index(k, l), col) = c / in_norm;
                }
        }
    return u2;
}

}  // namespace

double brute_force_coincidence(const TwoPhotonState& state, const DetectorWiring& wiring) {
    wiring.validate();
    if (wiring.analyzers) throw Error(ErrorKind::invalid_wiring, "oracle supports polarization-insensitive detectors only");
    if (state.empty()) return 0.0;

    std::vector<double> delays;
    std::vector<Branch> branches;
    for (const auto& t : state.terms()) {
        for (const auto* p : {&t.photon_a, &t.photon_b}) {
            if (p->mode.stage != Stage::input)
                throw Error(ErrorKind::invalid_stage, "oracle expects input-stage photons");
            delays.push_back(p->delay);
        }
        branches.push_back(t.branch);
    }
    std::sort(delays.begin(), delays.end());
    delays.erase(std::unique(delays.begin(), delays.end()), delays.end());
    std::sort(branches.begin(), branches.end());
    branches.erase(std::unique(branches.begin(), branches.end()), branches.end());

    const auto kd = static_cast<Index>(delays.size());
    RMatrix time_gram(kd, kd);
    const double s2 = state.sigma_t() * state.sigma_t();
    for (Index a = 0; a < kd; ++a)
        for (Index b = 0; b < kd; ++b) {
            const double dt = delays[static_cast<std::size_t>(a)] - delays[static_cast<std::size_t>(b)];
            time_gram(a, b) = std::exp(-dt * dt / (8.0 * s2));
        }
    const RMatrix time = gram_factor(time_gram);

    const auto kb = static_cast<Index>(branches.size());
    RMatrix env_gram(kb, kb);
    for (Index a = 0; a < kb; ++a)
        for (Index b = 0; b < kb; ++b) {
            const Branch x = branches[static_cast<std::size_t>(a)];
            const Branch y = branches[static_cast<std::size_t>(b)];
            env_gram(a, b) = (x.pol == y.pol ? 1.0 : state.coherence().v_pol) *
                             (x.mom == y.mom ? 1.0 : state.coherence().v_mom);
        }
    const RMatrix env = gram_factor(env_gram);

    const Index r = time.cols();
    const SymmetricBasis basis{8 * r};
    auto delay_row = [&](double d) {
        return static_cast<Index>(std::lower_bound(delays.begin(), delays.end(), d) - delays.begin());
    };
    auto branch_row = [&](Branch b) {
        return static_cast<Index>(std::lower_bound(branches.begin(), branches.end(), b) - branches.begin());
    };

    // One two-photon vector per orthonormal environment direction.
    std::vector<CVector> psi(static_cast<std::size_t>(env.cols()), CVector::Zero(basis.dim()));
    const double sqrt2 = std::sqrt(2.0);
    for (const auto& t : state.terms()) {
        const Index ra = delay_row(t.photon_a.delay);
        const Index rb = delay_row(t.photon_b.delay);
        const Index re = branch_row(t.branch);
        const Index ma = local_index(t.photon_a.mode);
        const Index mb = local_index(t.photon_b.mode);
        for (Index e = 0; e < env.cols(); ++e) {
            const Complex c = t.amplitude * env(re, e);
            for (Index t1 = 0; t1 < r; ++t1)
                for (Index t2 = 0; t2 < r; ++t2) {
                    const Index p = ma * r + t1;
                    const Index q = mb * r + t2;
                    const Complex coef = c * time(ra, t1) * time(rb, t2);
                    psi[static_cast<std::size_t>(e)](basis.index(p, q)) += p == q ? coef * sqrt2 : coef;
                }
        }
    }

    CMatrix u1 = CMatrix::Zero(basis.n, basis.n);
    const CMatrix bs = beamsplitter_unitary();
    for (Index out = 0; out < 8; ++out)
        for (Index in = 0; in < 8; ++in)
            for (Index k = 0; k < r; ++k) u1(out * r + k, in * r + k) = bs(out, in);
    const CMatrix u2 = two_photon_unitary(u1, basis);

    double prob = 0.0;
    for (const auto& v : psi) {
        const CVector out = u2 * v;
        for (Index i = 0; i < basis.n; ++i)
            for (Index j = i; j < basis.n; ++j) {
                const Mode mi = output_mode(static_cast<int>(i / r));
                const Mode mj = output_mode(static_cast<int>(j / r));
                const bool coincident = (wiring.side1.contains(mi) && wiring.side2.contains(mj)) ||
                                        (wiring.side2.contains(mi) && wiring.side1.contains(mj));
                if (coincident) prob += std::norm(out(basis.index(i, j)));
            }
    }
    return prob;
}

TwoPhotonState random_four_term_state(std::mt19937_64& rng, double sigma_t, bool zero_delays) {
    std::uniform_int_distribution<int> mode_pick(0, 7);
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> delay_step(0, 2);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto modes = input_modes();
    for (;;) {
        const Coherence coherence{unit(rng), unit(rng)};
        std::vector<TwoPhotonTerm> terms;
        for (int k = 0; k < 4; ++k) {
            TwoPhotonTerm t;
            t.photon_a.mode = modes[static_cast<std::size_t>(mode_pick(rng))];
            t.photon_b.mode = modes[static_cast<std::size_t>(mode_pick(rng))];
            if (!zero_delays) {
                t.photon_a.delay = 0.5 * sigma_t * delay_step(rng);
                t.photon_b.delay = 0.5 * sigma_t * delay_step(rng);
            }
            t.amplitude = Complex(gauss(rng), gauss(rng));
            t.branch = Branch{static_cast<std::uint8_t>(bit(rng)), static_cast<std::uint8_t>(bit(rng))};
            terms.push_back(t);
        }
        const TwoPhotonState s(sigma_t, coherence, std::move(terms));
        if (s.norm2() > 1e-6) return normalize(s);
    }
}

}  // namespace hyperent
