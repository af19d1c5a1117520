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

#include "vacuum/experiment/cli.hpp"

#include "vacuum/error.hpp"
#include "vacuum/experiment/commands.hpp"
#include "vacuum/experiment/config.hpp"
#include "vacuum/experiment/csv.hpp"
#include "vacuum/simd/kernels.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>

namespace vacuum::experiment {

namespace {

using json = nlohmann::ordered_json;

std::filesystem::path output_path(const ExperimentConfig &config, std::string_view suffix) {
    return std::filesystem::path(config.output_prefix + std::string(suffix));
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << text;
}

void write_manifest(const ExperimentConfig &config, std::string_view command,
                    const std::vector<std::filesystem::path> &outputs,
                    const json &summary, double seconds) {
    json manifest;
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["seed"] = config.estimation.seed;
    manifest["simd_backend"] = simd::backend_name(simd::kernels().backend);
    manifest["schedule_discretization"] = "midpoint";
    manifest["wall_clock_seconds"] = seconds;
    manifest["config"] = serialize(config);
    json files = json::array();
    for (const auto &p : outputs) {
        files.push_back(p.string());
    }
    manifest["outputs"] = files;
    manifest["summary"] = summary;
    write_text(output_path(config, ".manifest.json"), manifest.dump(2) + "\n");
}

void print_summary(std::ostream &out, const json &summary) {
    for (const auto &[key, value] : summary.items()) {
        if (value.is_number_float()) {
            out << key << '=' << format_number(value.get<double>()) << '\n';
        } else {
            out << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump())
                << '\n';
        }
    }
}

json sweep_command(const ExperimentConfig &config, std::vector<std::filesystem::path> &files) {
    const auto result = run_sweep(config);
    const auto csv = output_path(config, ".sweep.csv");
    write_sweep_csv(result, csv);
    files.push_back(csv);

    json summary;
    summary["ground_weight"] = result.ground_weight;
    summary["two_p0_minus_1"] = result.two_p0_minus_1;
    summary["exact_ground_Z"] = result.exact_ground_z;
    if (result.oscillation) {
        const auto &fit = *result.oscillation;
        summary["oscillation_center"] = fit.center;
        summary["oscillation_amplitude"] = fit.amplitude;
        if (fit.period) {
            summary["oscillation_period"] = *fit.period;
        }
    }
    const auto &warnings = result.prep.warnings;
    summary["warnings"] = warnings.size();
    return summary;
}

json filter_command(const ExperimentConfig &config, std::vector<std::filesystem::path> &files) {
    const auto result = run_filter_experiment(config);
    const auto csv = output_path(config, ".filter.csv");
    write_filter_csv(result, csv);
    files.push_back(csv);

    json summary;
    summary["mode"] = result.discard ? "discard" : "keep";
    summary["raw"] = result.raw;
    summary["raw_std_error"] = result.raw_std_error;
    summary["two_p0_minus_1"] = result.two_p0_minus_1;
    summary["two_p0_minus_1_std_error"] = result.two_p0_minus_1_std_error;
    summary["corrected"] = result.corrected;
    summary["corrected_std_error"] = result.corrected_std_error;
    if (result.postselected_z) {
        summary["postselected_Z"] = *result.postselected_z;
        summary["postselected_std_error"] = *result.postselected_std_error;
    }
    summary["exact_ground_Z"] = result.exact_ground_z;
    summary["cross_term_at_T"] = result.cross_term_at_T;
    summary["discontinuity_at_T"] = result.discontinuity;
    return summary;
}

json refine_command(const ExperimentConfig &config, std::vector<std::filesystem::path> &files) {
    const auto result = run_refine(config);
    const auto csv = output_path(config, ".refine.csv");
    write_refine_csv(result, csv);
    files.push_back(csv);

    json summary;
    summary["status"] = to_string(result.report.status);
    if (!result.report.message.empty()) {
        summary["message"] = result.report.message;
    }
    summary["exact_E0"] = result.exact_e0;
    summary["start_energy"] = result.start_energy;
    summary["start_fidelity"] = result.start_fidelity;
    summary["iterations"] = result.report.iterations.size();
    if (!result.report.iterations.empty()) {
        summary["final_fidelity"] = result.report.iterations.back().fidelity_to_ground;
    }
    return summary;
}

json diag_command(const ExperimentConfig &config, std::vector<std::filesystem::path> &files,
                  std::ostream &out) {
    const auto result = run_diag(config);
    const auto report = output_path(config, ".diag.txt");
    write_text(report, result.report);
    files.push_back(report);
    out << result.report;

    json summary;
    summary["E0"] = result.spectrum.energy(0);
    summary["gap"] = result.spectrum.gap();
    summary["ground_Z0"] = result.ground_z.front();
    return summary;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Adiabatic vacuum preparation and ancilla filtering experiments",
                 "vacuum-refine"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> prefix;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"sweep", "Adiabatic ramp followed by evolution under the final Hamiltonian"},
        {"filter-run", "Ramp, one-ancilla tagging circuit at t = T, then hold"},
        {"refine", "Ramp followed by iterated multi-ancilla filtering"},
        {"diag", "Exact spectrum and ground-state diagnostics"},
    };
    for (const auto &[name, description] : commands) {
        auto *sub = app.add_subcommand(name, description);
        sub->add_option("--config", config_path, "Experiment config file")->required();
        sub->add_option("--seed", seed, "Override estimation.seed");
        sub->add_option("--out", prefix, "Override output.prefix");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        ExperimentConfig config = load_config(config_path);
        if (seed) {
            config.estimation.seed = *seed;
        }
        if (prefix) {
            config.output_prefix = *prefix;
        }
        validate(config);

        const auto start = std::chrono::steady_clock::now();
        std::vector<std::filesystem::path> files;
        json summary;
        if (command == "sweep") {
            summary = sweep_command(config, files);
        } else if (command == "filter-run") {
            summary = filter_command(config, files);
        } else if (command == "refine") {
            summary = refine_command(config, files);
        } else {
            summary = diag_command(config, files, out);
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        write_manifest(config, command, files, summary, seconds);
        if (command != "diag") {
            print_summary(out, summary);
        }
        return 0;
    } catch (const ConfigError &e) {
        err << "vacuum-refine " << command << ": config error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "vacuum-refine " << command << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        err << "vacuum-refine " << command << ": " << e.what() << '\n';
        return 1;
    }
}

} // namespace vacuum::experiment
