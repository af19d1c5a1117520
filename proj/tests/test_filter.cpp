// Copyright 2026 The vacuum-refine Authors
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

#include "oracle.hpp"

#include "vacuum/error.hpp"
#include "vacuum/estimator.hpp"
#include "vacuum/filter.hpp"
#include "vacuum/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace {

using namespace vacuum;
using oracle::cd;
using oracle::Mat;
using oracle::Vec;

constexpr double kJ = std::numbers::pi / 4;

// Geometric-sum form of the default filter: (1 + z + ... + z^(2^m - 1)) / 2^m.
cd geometric_amplitude(double energy, double theta, std::size_t m) {
    const cd z = cd(0, 1) * std::exp(cd(0, -energy * theta / 2));
    cd sum = 0;
    cd zk = 1;
    const std::size_t count = std::size_t{1} << m;
    for (std::size_t k = 0; k < count; ++k) {
        sum += zk;
        zk *= z;
    }
    return sum / static_cast<double>(count);
}

// Whole filter circuit as one dense matrix on m ancillas + n system qubits.
Mat oracle_filter_circuit(const Mat &h, std::size_t n, std::size_t m, double theta,
                          const std::vector<unsigned> &powers) {
    const std::size_t total = n + m;
    Mat hw = Mat::Identity(1, 1);
    for (std::size_t a = 0; a < m; ++a) {
        Mat had(2, 2);
        had << 1, 1, 1, -1;
        hw = oracle::kron(hw, had / std::sqrt(2.0));
    }
    hw = oracle::kron(hw, Mat::Identity(std::size_t{1} << n, std::size_t{1} << n));
    std::vector<std::size_t> system(n);
    for (std::size_t q = 0; q < n; ++q) {
        system[q] = m + q;
    }
    Mat circuit = hw;
    for (std::size_t j = 0; j < m; ++j) {
        const double k = powers[j];
        const cd phase = std::pow(cd(0, 1), static_cast<int>(powers[j]));
        const Mat u = phase * oracle::expm_i(h, k * theta / 2);
        circuit = oracle::embed(u, system, total, {j}) * circuit;
    }
    return hw * circuit;
}

Mat random_hamiltonian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal;
    const std::size_t dim = std::size_t{1} << n;
    Mat a(dim, dim);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            a(i, j) = cd(normal(rng), normal(rng));
        }
    }
    return (a + a.adjoint()) / 2.0;
}

PauliSum to_pauli_sum(const Mat &h, std::size_t n) {
    // Project onto the Pauli basis: c_P = Tr(P h) / 2^n.
    PauliSum out(n);
    const char symbols[] = {'I', 'X', 'Y', 'Z'};
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < count; ++code) {
        std::string s;
        for (std::size_t q = 0; q < n; ++q) {
            s.push_back(symbols[(code >> (2 * (n - 1 - q))) & 3U]);
        }
        const cd c = (oracle::pauli_string(s) * h).trace() / static_cast<double>(h.rows());
        if (std::abs(c.real()) > 0) {
            out.add_term(c.real(), PauliString(s));
        }
    }
    return out;
}

TEST(FilterConfig, DefaultsAndValidation) {
    FilterConfig c;
    c.num_ancillas = 3;
    c.theta = 1.0;
    EXPECT_EQ(c.resolved_powers(), (std::vector<unsigned>{1, 2, 4}));
    c.powers = {1, 0, 2};
    EXPECT_THROW(c.validate(), DomainError);
    c.powers = {1, 2};
    EXPECT_THROW(c.validate(), DomainError);
    c.num_ancillas = 0;
    c.powers.clear();
    EXPECT_THROW(c.validate(), DomainError);
}

TEST(FilterAmplitude, ProductEqualsGeometricSum) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 500; ++i) {
        const double e = u(rng);
        const double theta = u(rng);
        for (std::size_t m = 1; m <= 4; ++m) {
            FilterConfig c{m, theta, {}};
            const cd a = filter_amplitude(e, theta, c);
            EXPECT_LE(std::abs(a - geometric_amplitude(e, theta, m)), 1e-12);
            EXPECT_LE(std::abs(a), 1.0 + 1e-15);
        }
    }
}

TEST(FilterAmplitude, ResonancePassesExactly) {
    for (double e : {-2.5, -kJ, -0.1, 0.3, 1.75}) {
        for (std::size_t m = 1; m <= 4; ++m) {
            const double theta = std::numbers::pi / e;
            EXPECT_LE(std::abs(filter_amplitude(e, theta, FilterConfig{m, theta, {}}) - 1.0),
                      1e-12);
        }
    }
}

TEST(FilterAmplitude, RejectsExcitedLevelOfOneQubitModel) {
    const double theta = choose_theta(-kJ);
    EXPECT_DOUBLE_EQ(theta, -4.0);
    EXPECT_LE(std::abs(filter_amplitude(kJ, theta, FilterConfig{2, theta, {}})), 1e-12);
    EXPECT_LE(std::abs(filter_amplitude(kJ, theta, FilterConfig{1, theta, {}})), 1e-12);
}

TEST(Filter, ChooseThetaRejectsZeroEnergy) {
    EXPECT_THROW((void)choose_theta(0.0), DomainError);
    EXPECT_THROW((void)choose_theta(1e-12), DomainError);
}

TEST(Filter, CircuitMatchesDenseOracle) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-3, 3);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
            const Mat h = random_hamiltonian(n, rng);
            const PauliSum hs = to_pauli_sum(h, n);
            const double theta = u(rng);
            std::vector<unsigned> powers;
            if (m == 2) {
                powers = {3, 1};
            }
            const FilterConfig c{m, theta, powers};
            const Vec psi = oracle::random_state(std::size_t{1} << n, rng);
            const auto out = apply_filter(oracle::to_state(psi), hs, c, false);
            ASSERT_TRUE(out.joint_state.has_value());

            Vec joint_in = Vec::Zero(std::size_t{1} << (n + m));
            joint_in.head(psi.size()) = psi;
            const Vec expected =
                oracle_filter_circuit(h, n, m, theta, c.resolved_powers()) * joint_in;
            EXPECT_LE(oracle::max_abs(Vec(oracle::to_vec(*out.joint_state) - expected)), 1e-11)
                << "n=" << n << " m=" << m;
            EXPECT_NEAR(out.success_probability, expected.head(psi.size()).squaredNorm(),
                        1e-12);
        }
    }
}

TEST(Filter, EigenstateAmplitudeMatchesClosedForm) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const std::size_t m = 1 + trial % 3;
        const Mat h = random_hamiltonian(n, rng);
        Eigen::SelfAdjointEigenSolver<Mat> eig(h);
        const std::size_t j = static_cast<std::size_t>(trial) % (std::size_t{1} << n);
        const Vec e = eig.eigenvectors().col(static_cast<Eigen::Index>(j));
        const double energy = eig.eigenvalues()(static_cast<Eigen::Index>(j));
        const double theta = u(rng);
        const FilterConfig c{m, theta, {}};
        const auto out = apply_filter(oracle::to_state(e), to_pauli_sum(h, n), c, false);
        const Vec joint = oracle::to_vec(*out.joint_state);
        const cd amplitude = e.dot(joint.head(e.size()));
        EXPECT_LE(std::abs(amplitude - filter_amplitude(energy, theta, c)), 1e-10);
    }
}

TEST(Filter, DiscardReturnsNormalizedSystemState) {
    const auto h = hadamard_hamiltonian(kJ);
    const auto spec = exact_diagonalize(h);
    const auto psi = StateVector::from_amplitudes({0.8, 0.6});
    const double theta = choose_theta(spec.energy(0));
    const auto out = apply_filter(psi, h, FilterConfig{2, theta, {}}, true);
    ASSERT_TRUE(out.refined_state.has_value());
    EXPECT_EQ(out.refined_state->num_qubits(), 1U);
    EXPECT_NEAR(fidelity(*out.refined_state, spec.ground_state()), 1.0, 1e-12);
    EXPECT_NEAR(out.success_probability, std::norm(inner_product(spec.ground_state(), psi)),
                1e-12);
}

TEST(Tagging, RealizesEigenIndexCopy) {
    // Closed-form eigenvectors of (Z + X)/sqrt2.
    const double c = std::cos(std::numbers::pi / 8);
    const double s = std::sin(std::numbers::pi / 8);
    const Vec e0 = (Vec(2) << c, s).finished();
    const Vec e1 = (Vec(2) << -s, c).finished();
    const cd alpha(0.6, 0.1);
    const cd beta = std::sqrt(1 - std::norm(alpha));
    const Vec psi = alpha * e0 + beta * e1;
    Vec joint = Vec::Zero(4);
    joint.head(2) = psi;

    const auto out = tag_circuit_one_qubit(oracle::to_state(joint),
                                           exact_diagonalize(hadamard_hamiltonian(kJ)));
    Vec expected = Vec::Zero(4);
    expected.head(2) = alpha * e0;
    expected.tail(2) = beta * e1;
    // Eigenvector phases are convention; compare each branch up to its own phase.
    const Vec got = oracle::to_vec(out);
    EXPECT_LE(oracle::phase_distance(expected.head(2).normalized(), got.head(2).normalized()),
              1e-12);
    EXPECT_LE(oracle::phase_distance(expected.tail(2).normalized(), got.tail(2).normalized()),
              1e-12);
    EXPECT_NEAR(got.head(2).squaredNorm(), std::norm(alpha), 1e-14);
}

TEST(Tagging, RequiresCleanAncilla) {
    const auto joint = StateVector::from_amplitudes({0, 0, 1, 0});
    EXPECT_THROW((void)tag_circuit_one_qubit(joint, exact_diagonalize(hadamard_hamiltonian(kJ))),
                 ValidationError);
}

TEST(Refine, OracleThetaRejectsExcitedLevelInOnePass) {
    const auto h = hadamard_hamiltonian(kJ);
    const auto psi = StateVector::from_amplitudes({0.8, 0.6});
    RefineOptions o;
    o.num_ancillas = 2;
    o.max_iters = 1;
    o.fixed_theta = std::numbers::pi / -kJ;
    const auto report = refine_iteratively(psi, h, o);
    ASSERT_EQ(report.iterations.size(), 1U);
    EXPECT_LE(report.iterations[0].excited_weight, 1e-12);
}

TEST(Refine, WeightsDecayByAmplitudeRatio) {
    const auto h = transverse_ising_pair(kJ, 1.0);
    const auto spec = exact_diagonalize(h);
    const auto psi = StateVector::from_amplitudes({0.7, 0.5, 0.4, std::sqrt(1 - 0.9)});
    RefineOptions o;
    o.num_ancillas = 3;
    o.max_iters = 4;
    const auto report = refine_iteratively(psi, h, o);
    ASSERT_FALSE(report.iterations.empty());
    auto prior = eigen_overlaps(psi, spec).weights;
    double prev_fidelity = prior[0];
    for (const auto &it : report.iterations) {
        const FilterConfig c{3, it.theta, {}};
        const cd a0 = filter_amplitude(spec.energy(0), it.theta, c);
        for (std::size_t j = 1; j < 4; ++j) {
            const double ratio = std::norm(filter_amplitude(spec.energy(j), it.theta, c) / a0);
            EXPECT_NEAR(it.weights[j] / it.weights[0], prior[j] / prior[0] * ratio, 1e-8);
        }
        EXPECT_GT(it.fidelity_to_ground, prev_fidelity);
        prev_fidelity = it.fidelity_to_ground;
        prior = it.weights;
    }
}

TEST(Refine, AbortsOnZeroEnergyEstimate) {
    // <+|Z|+> = 0 gives E0' = 0.
    const PauliSum h(1, {{1.0, PauliString("Z")}});
    const auto plus = StateVector::from_amplitudes({oracle::kInvSqrt2, oracle::kInvSqrt2});
    const auto report = refine_iteratively(plus, h, RefineOptions{});
    EXPECT_EQ(report.status, RefinementStatus::aborted);
    EXPECT_TRUE(report.iterations.empty());
    EXPECT_FALSE(report.message.empty());
}

} // namespace
