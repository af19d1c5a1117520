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
#include "vacuum/hamiltonian.hpp"
#include "vacuum/pauli.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <sstream>

namespace {

using namespace vacuum;
using oracle::Mat;

constexpr double kJ = std::numbers::pi / 4;

TEST(PauliString, ParseAndMasks) {
    const PauliString p("XZY");
    EXPECT_EQ(p.num_qubits(), 3U);
    EXPECT_EQ(p.x_mask(), 0b101U);
    EXPECT_EQ(p.z_mask(), 0b011U);
    EXPECT_EQ(p.to_string(), "XZY");
    EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_TRUE(PauliString("ZIZ").is_diagonal());
    EXPECT_TRUE(PauliString("XIX").is_x_type());
    EXPECT_THROW(PauliString("XQ"), Error);
    EXPECT_EQ(PauliString::single(3, 1, 'Z').to_string(), "IZI");
}

TEST(PauliSum, MergesAndDropsZeros) {
    const PauliSum s(1, {{0.5, PauliString("Z")}, {0.25, PauliString("X")},
                         {0.5, PauliString("Z")}, {-0.25, PauliString("X")}});
    ASSERT_EQ(s.terms().size(), 1U);
    EXPECT_DOUBLE_EQ(s.coefficient("Z"), 1.0);
    EXPECT_DOUBLE_EQ(s.coefficient("X"), 0.0);
}

TEST(PauliSum, TextRoundTrip) {
    const PauliSum s(2, {{-0.7853981633974483, PauliString("ZZ")}, {0.1, PauliString("XI")}});
    EXPECT_EQ(PauliSum::parse(s.to_text()), s);
}

TEST(PauliSum, ParseReportsLine) {
    try {
        (void)PauliSum::parse("# comment\n-0.5 Z\n1.0 W\n");
        FAIL() << "expected ConfigError";
    } catch (const ConfigError &e) {
        EXPECT_EQ(e.line(), 3);
    }
    EXPECT_THROW((void)PauliSum::parse("0.5 ZZ\n0.5 Z\n"), ConfigError);
    EXPECT_THROW((void)PauliSum::parse("abc Z\n"), ConfigError);
}

TEST(PauliSum, ProductOrderDiagonalThenXThenRest) {
    const PauliSum s(2, {{1, PauliString("YI")}, {1, PauliString("XI")}, {1, PauliString("IZ")},
                         {1, PauliString("IX")}, {1, PauliString("ZZ")}, {1, PauliString("XY")}});
    std::vector<std::string> order;
    for (const auto &t : s.product_ordered_terms()) {
        order.push_back(t.string.to_string());
    }
    EXPECT_EQ(order, (std::vector<std::string>{"IZ", "ZZ", "IX", "XI", "XY", "YI"}));
}

TEST(Hamiltonian, ToMatrixMatchesKronecker) {
    const PauliSum h(3, {{0.3, PauliString("XYZ")}, {-1.1, PauliString("IZI")},
                         {0.7, PauliString("YYI")}});
    const Mat expected = oracle::hamiltonian({{0.3, "XYZ"}, {-1.1, "IZI"}, {0.7, "YYI"}});
    EXPECT_LE(oracle::max_abs(Mat(to_matrix(h) - expected)), 1e-15);
}

TEST(Hamiltonian, ModelSpectraMatchClosedForms) {
    const auto single = exact_diagonalize(hadamard_hamiltonian(kJ));
    EXPECT_NEAR(single.energy(0), -kJ, 1e-14);
    EXPECT_NEAR(single.energy(1), kJ, 1e-14);
    EXPECT_NEAR(single.gap(), std::numbers::pi / 2, 1e-14);
    EXPECT_FALSE(single.degenerate_ground);

    // -J(ZZ + g(XI + IX)) has levels -J sqrt(1 + 4g^2), -J, J, J sqrt(1 + 4g^2).
    const double g = 1.0;
    const auto pair = exact_diagonalize(transverse_ising_pair(kJ, g));
    const double outer = kJ * std::sqrt(1 + 4 * g * g);
    EXPECT_NEAR(pair.energy(0), -outer, 1e-13);
    EXPECT_NEAR(pair.energy(1), -kJ, 1e-13);
    EXPECT_NEAR(pair.energy(2), kJ, 1e-13);
    EXPECT_NEAR(pair.energy(3), outer, 1e-13);

    const auto start = exact_diagonalize(initial_hamiltonian(kJ, 1));
    EXPECT_NEAR(start.gap(), 2 * kJ, 1e-14);
    EXPECT_NEAR(std::abs(start.ground_state().amplitude(0)), 1.0, 1e-14);

    EXPECT_TRUE(exact_diagonalize(initial_hamiltonian(kJ, 2)).degenerate_ground == false);
    EXPECT_TRUE(exact_diagonalize(PauliSum(2, {{-1.0, PauliString("ZI")}})).degenerate_ground);
}

TEST(Hamiltonian, InterpolateIsAffine) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    const auto h0 = initial_hamiltonian(kJ, 2);
    const auto h1 = transverse_ising_pair(kJ, 0.7);
    for (int i = 0; i < 20; ++i) {
        const double s = u(rng);
        const Mat expected = (1 - s) * Mat(to_matrix(h0)) + s * Mat(to_matrix(h1));
        EXPECT_LE(oracle::max_abs(Mat(to_matrix(interpolate(h0, h1, s)) - expected)), 1e-12);
    }
    EXPECT_THROW((void)interpolate(h0, h1, 1.5), DomainError);
}

TEST(Hamiltonian, DiagonalizationReconstructs) {
    std::mt19937_64 rng(2);
    std::normal_distribution<double> normal;
    const char *strings[] = {"XIZ", "ZZI", "IYY", "XXX", "ZIZ", "IIX"};
    PauliSum h(3);
    for (const char *s : strings) {
        h.add_term(normal(rng), PauliString(s));
    }
    const auto spec = exact_diagonalize(h);
    const Mat v = spec.eigenvectors;
    const Mat rebuilt = v * spec.eigenvalues.cast<complex_t>().asDiagonal() * v.adjoint();
    EXPECT_LE(oracle::max_abs(Mat(rebuilt - Mat(to_matrix(h)))), 1e-10);
    EXPECT_LE(oracle::max_abs(Mat(v.adjoint() * v - Mat::Identity(8, 8))), 1e-10);
}

TEST(Hamiltonian, EvolutionMatchesExponentialAndGroupProperty) {
    const auto h = transverse_ising_pair(kJ, 0.6);
    const Mat expected = oracle::expm_i(oracle::hamiltonian({{-kJ, "ZZ"}, {-kJ * 0.6, "XI"},
                                                              {-kJ * 0.6, "IX"}}),
                                        0.9);
    EXPECT_LE(oracle::max_abs(Mat(Mat(evolution_unitary(h, 0.9).matrix()) - expected)), 1e-12);

    const auto spec = exact_diagonalize(h);
    for (auto [t1, t2] : {std::pair{0.3, 1.7}, std::pair{-2.0, 0.5}, std::pair{5.0, 7.25}}) {
        const Mat lhs = Mat(evolution_unitary(spec, t1).matrix()) *
                        Mat(evolution_unitary(spec, t2).matrix());
        const Mat rhs = evolution_unitary(spec, t1 + t2).matrix();
        EXPECT_LE(oracle::max_abs(Mat(lhs - rhs)), 1e-10);
    }
}

TEST(Hamiltonian, DenseCapEnforced) {
    EXPECT_THROW((void)to_matrix(initial_hamiltonian(kJ, 11)), ResourceError);
    EXPECT_THROW((void)to_matrix(initial_hamiltonian(kJ, 3), 2), ResourceError);
}

TEST(Gate, UnitarityAndComposition) {
    DenseMatrix bad(2, 2);
    bad << 1, 1, 0, 1;
    EXPECT_THROW(GateMatrix{bad}, ValidationError);
    DenseMatrix three(3, 3);
    three.setIdentity();
    EXPECT_THROW(GateMatrix{three}, Error);
    const auto hz = gates::hadamard().compose(gates::pauli_z());
    const Mat expected = Mat(gates::hadamard().matrix()) * Mat(gates::pauli_z().matrix());
    EXPECT_LE(oracle::max_abs(Mat(Mat(hz.matrix()) - expected)), 1e-15);
    EXPECT_LE(oracle::max_abs(Mat(Mat(gates::rz(0.4).matrix()) -
                                  oracle::expm_i(oracle::pauli("Z"[0]), 0.2))),
              1e-14);
}

TEST(Pauli, StreamOutput) {
    std::ostringstream os;
    os << PauliString("XZ");
    EXPECT_EQ(os.str(), "XZ");
}

} // namespace
