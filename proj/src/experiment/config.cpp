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

#include "vacuum/experiment/config.hpp"

#include "vacuum/error.hpp"
#include "vacuum/filter.hpp"
#include "vacuum/hamiltonian.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace vacuum::experiment {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_double(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::uint64_t parse_unsigned(std::string_view text) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ConfigError("expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw ConfigError("expected true or false, got '" + std::string(text) + "'");
}

std::vector<unsigned> parse_powers(std::string_view text) {
    std::vector<unsigned> powers;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        const auto value = parse_unsigned(item);
        if (value == 0 || value > 1U << 20) {
            throw ConfigError("filter powers must be in 1..2^20");
        }
        powers.push_back(static_cast<unsigned>(value));
        if (comma == std::string_view::npos) {
            break;
        }
        text = text.substr(comma + 1);
    }
    return powers;
}

ThetaMode parse_theta_mode(std::string_view text) {
    if (text == "auto") {
        return ThetaMode::automatic;
    }
    if (text == "fixed") {
        return ThetaMode::fixed;
    }
    if (text == "oracle") {
        return ThetaMode::oracle;
    }
    throw ConfigError("expected auto, fixed or oracle, got '" + std::string(text) + "'");
}

std::string_view theta_mode_name(ThetaMode mode) {
    switch (mode) {
    case ThetaMode::automatic:
        return "auto";
    case ThetaMode::fixed:
        return "fixed";
    case ThetaMode::oracle:
        return "oracle";
    }
    return "auto";
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path resolve(const ExperimentConfig &config, std::string_view path) {
    std::filesystem::path p{std::string(path)};
    if (p.is_relative() && !config.base_dir.empty()) {
        p = config.base_dir / p;
    }
    return p;
}

void apply_key(ExperimentConfig &c, std::string_view key, std::string_view value) {
    if (key == "model.hamiltonian") {
        c.model.hamiltonian = std::string(value);
    } else if (key == "model.J") {
        c.model.J = parse_number(value);
    } else if (key == "model.g") {
        c.model.g = parse_number(value);
    } else if (key == "schedule.T") {
        c.schedule.total_time = parse_number(value);
    } else if (key == "schedule.dt") {
        c.schedule.dt = parse_number(value);
    } else if (key == "schedule.hold_time") {
        c.schedule.hold_time = parse_number(value);
    } else if (key == "evolution.mode") {
        try {
            c.mode = parse_evolution_mode(value);
        } catch (const DomainError &e) {
            throw ConfigError(e.what());
        }
    } else if (key == "start.state") {
        if (value == "adiabatic") {
            c.start = StartState::adiabatic;
        } else if (value == "ground") {
            c.start = StartState::ground;
        } else {
            throw ConfigError("expected adiabatic or ground, got '" + std::string(value) + "'");
        }
    } else if (key == "filter.ancillas") {
        c.filter.ancillas = parse_unsigned(value);
    } else if (key == "filter.theta_mode") {
        c.filter.theta_mode = parse_theta_mode(value);
    } else if (key == "filter.theta") {
        c.filter.theta = parse_number(value);
    } else if (key == "filter.powers") {
        c.filter.powers = parse_powers(value);
    } else if (key == "filter.discard") {
        c.filter.discard = parse_bool(value);
    } else if (key == "filter.max_iters") {
        c.filter.max_iters = parse_unsigned(value);
    } else if (key == "filter.target_infidelity") {
        c.filter.target_infidelity = parse_number(value);
    } else if (key == "estimation.mode") {
        if (value == "exact") {
            c.estimation.use_shots = false;
        } else if (value == "shots") {
            c.estimation.use_shots = true;
        } else {
            throw ConfigError("expected exact or shots, got '" + std::string(value) + "'");
        }
    } else if (key == "estimation.shots") {
        c.estimation.shots = parse_unsigned(value);
    } else if (key == "estimation.seed") {
        c.estimation.seed = parse_unsigned(value);
    } else if (key == "diag.state") {
        c.diag_state = std::string(value);
    } else if (key == "output.prefix") {
        c.output_prefix = std::string(value);
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

} // namespace

double parse_number(std::string_view text) {
    text = trim(text);
    if (text.empty()) {
        throw ConfigError("expected a number");
    }
    double sign = 1.0;
    if (text.front() == '-' && text.size() > 1 && !std::isdigit(static_cast<unsigned char>(text[1])) &&
        text[1] != '.') {
        sign = -1.0;
        text = trim(text.substr(1));
    }
    double result = 1.0;
    char op = '*';
    while (true) {
        const auto next = text.find_first_of("*/");
        const auto factor_text = trim(text.substr(0, next));
        double factor = 0.0;
        if (factor_text == "pi") {
            factor = M_PI;
        } else {
            const auto [ptr, ec] = std::from_chars(
                factor_text.data(), factor_text.data() + factor_text.size(), factor);
            if (factor_text.empty() || ec != std::errc{} ||
                ptr != factor_text.data() + factor_text.size()) {
                throw ConfigError("invalid number '" + std::string(factor_text) + "'");
            }
        }
        result = op == '*' ? result * factor : result / factor;
        if (next == std::string_view::npos) {
            break;
        }
        op = text[next];
        text = text.substr(next + 1);
    }
    if (!std::isfinite(result)) {
        throw ConfigError("number is not finite");
    }
    return sign * result;
}

ExperimentConfig parse_config(std::string_view text) {
    ExperimentConfig config;
    std::set<std::string, std::less<>> seen;
    std::size_t line_number = 0;
    while (!text.empty()) {
        ++line_number;
        const auto newline = text.find('\n');
        std::string_view line = text.substr(0, newline);
        text = newline == std::string_view::npos ? std::string_view{} : text.substr(newline + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value'", line_number);
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (value.empty()) {
            throw ConfigError("missing value for '" + std::string(key) + "'", line_number);
        }
        if (!seen.insert(std::string(key)).second) {
            throw ConfigError("duplicate key '" + std::string(key) + "'", line_number);
        }
        try {
            apply_key(config, key, value);
        } catch (const ConfigError &e) {
            throw ConfigError(std::string(key) + ": " + e.what(), line_number);
        }
    }
    validate(config);
    return config;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    ExperimentConfig config = parse_config(read_file(path));
    config.base_dir = path.parent_path();
    return config;
}

void validate(const ExperimentConfig &c) {
    if (c.model.hamiltonian != "hadamard" && c.model.hamiltonian != "tfim2" &&
        c.model.hamiltonian.rfind("file:", 0) != 0) {
        throw ConfigError("model.hamiltonian: expected hadamard, tfim2 or file:<path>, got '" +
                          c.model.hamiltonian + "'");
    }
    if (!(c.model.J > 0.0)) {
        throw ConfigError("model.J: must be positive");
    }
    if (!std::isfinite(c.model.g)) {
        throw ConfigError("model.g: must be finite");
    }
    try {
        c.schedule.validate();
    } catch (const DomainError &e) {
        throw ConfigError(std::string("schedule: ") + e.what());
    }
    try {
        FilterConfig{c.filter.ancillas, c.filter.theta, c.filter.powers}.validate();
    } catch (const DomainError &e) {
        throw ConfigError(std::string("filter: ") + e.what());
    }
    if (c.filter.max_iters == 0) {
        throw ConfigError("filter.max_iters: must be >= 1");
    }
    if (!(c.filter.target_infidelity >= 0.0)) {
        throw ConfigError("filter.target_infidelity: must be >= 0");
    }
    if (c.filter.theta_mode == ThetaMode::fixed && c.filter.theta == 0.0) {
        throw ConfigError("filter.theta: must be non-zero when filter.theta_mode = fixed");
    }
    if (c.estimation.use_shots && c.estimation.shots == 0) {
        throw ConfigError("estimation.shots: must be >= 1");
    }
    if (c.output_prefix.empty()) {
        throw ConfigError("output.prefix: must not be empty");
    }
}

std::string serialize(const ExperimentConfig &c) {
    std::ostringstream out;
    out << "model.hamiltonian = " << c.model.hamiltonian << '\n'
        << "model.J = " << format_double(c.model.J) << '\n'
        << "model.g = " << format_double(c.model.g) << '\n'
        << "schedule.T = " << format_double(c.schedule.total_time) << '\n'
        << "schedule.dt = " << format_double(c.schedule.dt) << '\n'
        << "schedule.hold_time = " << format_double(c.schedule.hold_time) << '\n'
        << "evolution.mode = " << to_string(c.mode) << '\n'
        << "start.state = " << (c.start == StartState::ground ? "ground" : "adiabatic") << '\n'
        << "filter.ancillas = " << c.filter.ancillas << '\n'
        << "filter.theta_mode = " << theta_mode_name(c.filter.theta_mode) << '\n'
        << "filter.theta = " << format_double(c.filter.theta) << '\n';
    if (!c.filter.powers.empty()) {
        out << "filter.powers = ";
        for (std::size_t j = 0; j < c.filter.powers.size(); ++j) {
            out << (j == 0 ? "" : ",") << c.filter.powers[j];
        }
        out << '\n';
    }
    out << "filter.discard = " << (c.filter.discard ? "true" : "false") << '\n'
        << "filter.max_iters = " << c.filter.max_iters << '\n'
        << "filter.target_infidelity = " << format_double(c.filter.target_infidelity) << '\n'
        << "estimation.mode = " << (c.estimation.use_shots ? "shots" : "exact") << '\n'
        << "estimation.shots = " << c.estimation.shots << '\n'
        << "estimation.seed = " << c.estimation.seed << '\n';
    if (!c.diag_state.empty()) {
        out << "diag.state = " << c.diag_state << '\n';
    }
    out << "output.prefix = " << c.output_prefix << '\n';
    return out.str();
}

PauliSum model_hamiltonian(const ExperimentConfig &config) {
    const auto &name = config.model.hamiltonian;
    if (name == "hadamard") {
        return hadamard_hamiltonian(config.model.J);
    }
    if (name == "tfim2") {
        return transverse_ising_pair(config.model.J, config.model.g);
    }
    if (name.rfind("file:", 0) == 0) {
        const auto path = resolve(config, std::string_view(name).substr(5));
        try {
            return PauliSum::parse(read_file(path));
        } catch (const ConfigError &e) {
            throw ConfigError(path.string() + ": " + e.what());
        }
    }
    throw ConfigError("model.hamiltonian: unknown model '" + name + "'");
}

PauliSum start_hamiltonian(const ExperimentConfig &config) {
    return initial_hamiltonian(config.model.J, model_hamiltonian(config).num_qubits());
}

StateVector load_state_file(const std::filesystem::path &path) {
    const std::string text = read_file(path);
    std::istringstream in(text);
    std::string line;
    std::size_t line_number = 0;
    std::vector<complex_t> amplitudes;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view = line;
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto space = view.find_first_of(" \t");
        if (space == std::string_view::npos) {
            throw ConfigError(path.string() + ": expected '<re> <im>'", line_number);
        }
        try {
            amplitudes.emplace_back(parse_number(view.substr(0, space)),
                                    parse_number(view.substr(space + 1)));
        } catch (const ConfigError &e) {
            throw ConfigError(path.string() + ": " + e.what(), line_number);
        }
    }
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > 1e-6) {
        throw ConfigError(path.string() + ": state is not normalised (norm^2 = " +
                          std::to_string(norm) + ")");
    }
    try {
        return StateVector::normalized(std::move(amplitudes));
    } catch (const Error &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

} // namespace vacuum::experiment
