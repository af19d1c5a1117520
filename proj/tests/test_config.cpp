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

#include "vacuum/error.hpp"
#include "vacuum/experiment/config.hpp"
#include "vacuum/experiment/csv.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <numbers>

namespace {

using namespace vacuum;
using namespace vacuum::experiment;

int error_line(std::string_view text) {
    try {
        (void)parse_config(text);
    } catch (const ConfigError &e) {
        return e.line();
    }
    return -1;
}

TEST(Config, DefaultsMatchReferenceRun) {
    const auto c = parse_config("");
    EXPECT_EQ(c.model.hamiltonian, "hadamard");
    EXPECT_DOUBLE_EQ(c.model.J, std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(c.schedule.total_time, 36.0);
    EXPECT_DOUBLE_EQ(c.schedule.dt, 1.0 / 24);
    EXPECT_DOUBLE_EQ(c.schedule.hold_time, 12.0);
    EXPECT_EQ(c.mode, EvolutionMode::exact_step);
    EXPECT_EQ(c.filter.ancillas, 2U);
    EXPECT_TRUE(c.estimation_mode().exact());
}

TEST(Config, ParsesAllKeys) {
    const auto c = parse_config(R"(
# comment
model.hamiltonian = tfim2
model.J = pi/8       # trailing comment
model.g = 0.5
schedule.T = 8
schedule.dt = 1/48
schedule.hold_time = 2
evolution.mode = trotter1
start.state = ground
filter.ancillas = 3
filter.theta_mode = fixed
filter.theta = -2*pi
filter.powers = 1, 2, 4
filter.discard = false
filter.max_iters = 7
filter.target_infidelity = 1e-6
estimation.mode = shots
estimation.shots = 5000
estimation.seed = 99
diag.state = s.txt
output.prefix = out/x
)");
    EXPECT_EQ(c.model.hamiltonian, "tfim2");
    EXPECT_DOUBLE_EQ(c.model.J, std::numbers::pi / 8);
    EXPECT_DOUBLE_EQ(c.schedule.dt, 1.0 / 48);
    EXPECT_EQ(c.mode, EvolutionMode::trotter1);
    EXPECT_EQ(c.start, StartState::ground);
    EXPECT_EQ(c.filter.theta_mode, ThetaMode::fixed);
    EXPECT_DOUBLE_EQ(c.filter.theta, -2 * std::numbers::pi);
    EXPECT_EQ(c.filter.powers, (std::vector<unsigned>{1, 2, 4}));
    EXPECT_FALSE(c.filter.discard);
    EXPECT_EQ(c.estimation_mode().shots, 5000U);
    EXPECT_EQ(c.estimation.seed, 99U);
    EXPECT_EQ(c.output_prefix, "out/x");
    EXPECT_NO_THROW(validate(c));
}

TEST(Config, SerializationRoundTrips) {
    auto c = parse_config("model.J = 0.1234567890123456789\nschedule.dt = 1/7\nschedule.T = 7\n"
                          "schedule.hold_time = 1\nfilter.powers = 3,1\nestimation.mode = shots\n");
    const std::string text = serialize(c);
    const auto back = parse_config(text);
    EXPECT_EQ(serialize(back), text);
    EXPECT_EQ(back.model.J, c.model.J);
    EXPECT_EQ(back.schedule.dt, c.schedule.dt);
    EXPECT_EQ(back.filter.powers, c.filter.powers);
}

TEST(Config, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("model.J = 1\nbogus.key = 3\n"), 2);
    EXPECT_EQ(error_line("\n\nmodel.J = abc\n"), 3);
    EXPECT_EQ(error_line("model.J = 1\nmodel.J = 2\n"), 2);
    EXPECT_EQ(error_line("just text\n"), 1);
    EXPECT_EQ(error_line("filter.discard = maybe\n"), 1);
    EXPECT_EQ(error_line("evolution.mode = rk4\n"), 1);
}

std::string error_message(std::string_view text) {
    try {
        (void)parse_config(text);
    } catch (const ConfigError &e) {
        return e.what();
    }
    return {};
}

TEST(Config, ValidationNamesField) {
    EXPECT_NE(error_message("schedule.dt = 0.3\nschedule.T = 1\n").find("schedule"),
              std::string::npos);
    EXPECT_NE(error_message("model.J = -1\n").find("model.J"), std::string::npos);
    EXPECT_NE(error_message("model.hamiltonian = bogus\n").find("model.hamiltonian"),
              std::string::npos);
    EXPECT_NE(error_message("filter.theta_mode = fixed\n").find("filter.theta"),
              std::string::npos);
    EXPECT_NE(error_message("filter.powers = 1,2,4\n").find("filter"), std::string::npos);

    auto c = parse_config("");
    c.filter.max_iters = 0;
    EXPECT_THROW(validate(c), ConfigError);
}

TEST(Config, NumberGrammar) {
    EXPECT_DOUBLE_EQ(parse_number("pi"), std::numbers::pi);
    EXPECT_DOUBLE_EQ(parse_number("-pi/4"), -std::numbers::pi / 4);
    EXPECT_DOUBLE_EQ(parse_number("2*pi/3"), 2 * std::numbers::pi / 3);
    EXPECT_DOUBLE_EQ(parse_number("1e-3"), 1e-3);
    EXPECT_THROW((void)parse_number("1/0"), ConfigError);
    EXPECT_THROW((void)parse_number("pie"), ConfigError);
}

class ConfigFiles : public ::testing::Test {
  protected:
    void SetUp() override {
        dir = std::filesystem::temp_directory_path() / "vacuum-config-test";
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }
    void write(const std::string &name, const std::string &text) {
        std::ofstream(dir / name) << text;
    }
    std::filesystem::path dir;
};

TEST_F(ConfigFiles, PauliFileRelativeToConfig) {
    write("h.pauli", "-1.0 ZZ\n0.5 XI\n");
    write("run.cfg", "model.hamiltonian = file:h.pauli\n");
    const auto c = load_config(dir / "run.cfg");
    const auto h = model_hamiltonian(c);
    EXPECT_EQ(h.num_qubits(), 2U);
    EXPECT_DOUBLE_EQ(h.coefficient("XI"), 0.5);
    EXPECT_EQ(start_hamiltonian(c).num_qubits(), 2U);
}

TEST_F(ConfigFiles, MalformedPauliFileReportsLine) {
    write("h.pauli", "-1.0 ZZ\n0.5 XQ\n");
    write("run.cfg", "model.hamiltonian = file:h.pauli\n");
    const auto c = load_config(dir / "run.cfg");
    try {
        (void)model_hamiltonian(c);
        FAIL();
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST_F(ConfigFiles, StateFile) {
    write("s.txt", "0.6 0\n0 0.8\n");
    const auto s = load_state_file(dir / "s.txt");
    EXPECT_EQ(s.num_qubits(), 1U);
    EXPECT_DOUBLE_EQ(s.amplitude(1).imag(), 0.8);
    write("bad.txt", "1 0\n1 0\n");
    EXPECT_THROW((void)load_state_file(dir / "bad.txt"), ConfigError);
    EXPECT_THROW((void)load_config(dir / "missing.cfg"), ConfigError);
}

TEST(Csv, NumberFormat) {
    EXPECT_EQ(format_number(0.70710678118654757), "0.707106781");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(36.0), "36");
    EXPECT_EQ(format_number(1e-12), "1e-12");
}

} // namespace
