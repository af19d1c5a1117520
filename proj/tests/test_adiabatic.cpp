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

#include "vacuum/adiabatic.hpp"
#include "vacuum/error.hpp"
#include "vacuum/hamiltonian.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace {

using namespace vacuum;
using oracle::Mat;
using oracle::Vec;

constexpr double kJ = std::numbers::pi / 4;

// Ramp from |0> under -J Z -> -J (Z + X)/sqrt2, midpoint s per step.
Vec oracle_ramp(double T, double dt, bool trotter) {
    const auto steps = static_cast<int>(std::lround(T / dt));
    const Mat z = oracle::pauli('Z');
    const Mat x = oracle::pauli('X');
    Vec psi = Vec::Zero(2);
    psi(0) = 1;
    for (int k = 0; k < steps; ++k) {
        const double s = (k + 0.5) * dt / T;
        const double cz = -kJ * (1 - s) - kJ * s * oracle::kInvSqrt2;
        const double cx = -kJ * s * oracle::kInvSqrt2;
        if (trotter) {
            psi = oracle::expm_i(cz * z, dt) * psi;
            psi = oracle::expm_i(cx * x, dt) * psi;
        } else {
            psi = oracle::expm_i(cz * z + cx * x, dt) * psi;
        }
    }
    return psi;
}

RecordingOptions z_recording() {
    RecordingOptions o;
    o.observables.push_back({"Z", PauliSum(1, {{1.0, PauliString("Z")}})});
    return o;
}

TEST(Schedule, MidpointAndValidation) {
    const Schedule s{36, 1.0 / 24, 12};
    EXPECT_NO_THROW(s.validate());
    EXPECT_EQ(s.ramp_steps(), 864U);
    EXPECT_EQ(s.hold_steps(), 288U);
    EXPECT_DOUBLE_EQ(s.s_at(0), 0.5 / 864);
    EXPECT_DOUBLE_EQ(s.s_at(863), 863.5 / 864);
    EXPECT_THROW((Schedule{1.0, 0.3, 0}.validate()), DomainError);
    EXPECT_THROW((Schedule{1.0, 2.0, 0}.validate()), DomainError);
    EXPECT_THROW((Schedule{1.0, 0.25, 0.1}.validate()), DomainError);
    EXPECT_THROW((Schedule{-1.0, 0.25, 0}.validate()), DomainError);
}

TEST(EvolutionMode, Names) {
    EXPECT_EQ(parse_evolution_mode("trotter1"), EvolutionMode::trotter1);
    EXPECT_EQ(to_string(EvolutionMode::exact_step), "exact_step");
    EXPECT_THROW((void)parse_evolution_mode("rk4"), Error);
}

TEST(Adiabatic, ExactStepMatchesOracle) {
    const Schedule s{9, 1.0 / 24, 0};
    const auto r = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s,
                                 EvolutionMode::exact_step, z_recording());
    EXPECT_LE(oracle::phase_distance(oracle_ramp(9, 1.0 / 24, false),
                                     oracle::to_vec(r.final_state)),
              1e-11);
}

TEST(Adiabatic, TrotterMatchesOracle) {
    const Schedule s{9, 1.0 / 24, 0};
    const auto r = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s,
                                 EvolutionMode::trotter1, z_recording());
    EXPECT_LE(oracle::phase_distance(oracle_ramp(9, 1.0 / 24, true),
                                     oracle::to_vec(r.final_state)),
              1e-11);
}

TEST(Adiabatic, TrajectoryShape) {
    const Schedule s{2, 0.25, 1};
    auto options = z_recording();
    options.keep_snapshots = true;
    const auto r = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s,
                                 EvolutionMode::exact_step, options);
    const auto &recs = r.trajectory.records;
    ASSERT_EQ(recs.size(), 9U);
    EXPECT_DOUBLE_EQ(recs.front().t, 0.0);
    EXPECT_DOUBLE_EQ(recs.back().t, 2.0);
    EXPECT_DOUBLE_EQ(recs.front().observable("Z").value, 1.0);
    EXPECT_NEAR(recs.front().fidelity_to_ground, 1.0, 1e-15);
    for (const auto &rec : recs) {
        EXPECT_TRUE(rec.snapshot.has_value());
        EXPECT_GE(rec.fidelity_to_ground, 0.0);
        EXPECT_LE(rec.fidelity_to_ground, 1.0);
    }

    const auto hold = run_hold(r.final_state, hadamard_hamiltonian(kJ), s,
                               EvolutionMode::exact_step, z_recording(), 2.0);
    EXPECT_EQ(hold.trajectory.records.size(), 5U);
    EXPECT_DOUBLE_EQ(hold.trajectory.records.back().t, 3.0);
}

TEST(Trajectory, RejectsNonIncreasingTime) {
    Trajectory t;
    TrajectoryRecord a;
    a.t = 1.0;
    t.append(a);
    EXPECT_THROW(t.append(a), Error);
    TrajectoryRecord b;
    b.t = 2.0;
    b.fidelity_to_ground = 1.5;
    EXPECT_THROW(t.append(b), Error);
}

double final_infidelity(double T, EvolutionMode mode) {
    const Schedule s{T, 1.0 / 24, 0};
    const auto r = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s, mode,
                                 z_recording());
    return 1.0 - r.trajectory.records.back().fidelity_to_ground;
}

TEST(Adiabatic, LongerRampImproves) {
    EXPECT_LE(final_infidelity(36, EvolutionMode::exact_step),
              final_infidelity(9, EvolutionMode::exact_step));
}

TEST(Adiabatic, PreparedStateReferenceValues) {
    // Frozen from an independent numpy run of the same midpoint schedule.
    const Schedule s{36, 1.0 / 24, 0};
    const auto r = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s,
                                 EvolutionMode::exact_step, z_recording());
    const auto &last = r.trajectory.records.back();
    EXPECT_NEAR(2 * last.fidelity_to_ground - 1, 0.999693, 5e-7);
    EXPECT_GE(last.energy, -kJ);
    EXPECT_LE(last.energy, kJ);
    EXPECT_LE(last.energy + kJ, 1e-2);
    EXPECT_TRUE(r.trajectory.warnings.empty());
}

TEST(Adiabatic, TrotterErrorIsFirstOrder) {
    const double T = 9;
    double prev = 0;
    for (double dt : {1.0 / 12, 1.0 / 24, 1.0 / 48}) {
        const Schedule s{T, dt, 0};
        const auto a = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s,
                                     EvolutionMode::exact_step, z_recording());
        const auto b = run_adiabatic(initial_hamiltonian(kJ, 1), hadamard_hamiltonian(kJ), s,
                                     EvolutionMode::trotter1, z_recording());
        const double err = (oracle::to_vec(a.final_state) - oracle::to_vec(b.final_state)).norm();
        if (prev > 0) {
            const double ratio = prev / err;
            EXPECT_GE(ratio, 1.7);
            EXPECT_LE(ratio, 2.3);
        }
        prev = err;
    }
}

TEST(Adiabatic, StartMustBeGroundOfInitialHamiltonian) {
    const Schedule s{1, 0.5, 0};
    EXPECT_THROW((void)run_adiabatic(hadamard_hamiltonian(kJ), initial_hamiltonian(kJ, 1), s,
                                     EvolutionMode::exact_step, z_recording()),
                 Error);
}

TEST(Adiabatic, DegenerateFinalHamiltonianWarns) {
    const Schedule s{1, 0.5, 0};
    const PauliSum h1(2, {{-1.0, PauliString("ZI")}});
    const auto r = run_adiabatic(initial_hamiltonian(kJ, 2), h1, s, EvolutionMode::exact_step,
                                 RecordingOptions{});
    EXPECT_FALSE(r.trajectory.warnings.empty());
}

TEST(Oscillation, RecoversSyntheticCosine) {
    std::vector<double> t;
    std::vector<double> y;
    for (int i = 0; i <= 288; ++i) {
        t.push_back(36 + i / 24.0);
        y.push_back(0.7 + 0.02 * std::cos(std::numbers::pi / 2 * t.back() + 0.3));
    }
    const auto fit = fit_oscillation(t, y);
    ASSERT_TRUE(fit.period.has_value());
    EXPECT_NEAR(*fit.period, 4.0, 1e-4);
    EXPECT_NEAR(fit.center, 0.7, 1e-6);
    EXPECT_NEAR(fit.amplitude, 0.02, 1e-6);
}

TEST(Oscillation, FlatSeriesHasNoPeriod) {
    const std::vector<double> t = {0, 1, 2, 3, 4};
    const std::vector<double> y = {0.5, 0.5, 0.5, 0.5, 0.5};
    const auto fit = fit_oscillation(t, y);
    EXPECT_FALSE(fit.period.has_value());
    EXPECT_DOUBLE_EQ(fit.center, 0.5);
}

} // namespace
