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

#include "hyperent/runner.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <system_error>

#include "hyperent/error.hpp"
#include "json.hpp"

namespace hyperent {

namespace {

using nlohmann::json;

/// Measured hyper-entangled fringe visibility, reported next to the model bound.
constexpr double kObservedHyperVisibility = 0.60;

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::io, "cannot open " + path.string() + " for writing");
    out << content;
    out.close();
    if (!out) throw Error(ErrorKind::io, "failed writing " + path.string());
}

json visibility_or_null(const Curve& c) {
    return c.max_probability() > 0.0 ? json(visibility(c)) : json(nullptr);
}

class Writer {
public:
    Writer(std::filesystem::path dir, RunResult& result) : dir_(std::move(dir)), result_(result) {}

    json curve(const std::string& name, const Curve& c, bool with_fwhm) {
        const auto path = dir_ / (name + ".csv");
        write_file(path, curve_to_csv(c));
        result_.files.push_back(path);
        json entry = {{"name", name}, {"file", path.filename().string()}, {"visibility", visibility_or_null(c)}};
        if (with_fwhm) {
            try {
                entry["dip_visibility"] = dip_visibility(c);
            } catch (const Error&) {
                entry["dip_visibility"] = nullptr;
            }
            try {
                entry["fwhm"] = dip_fwhm(c);
            } catch (const Error&) {
                entry["fwhm"] = nullptr;
            }
        }
        return entry;
    }

private:
    std::filesystem::path dir_;
    RunResult& result_;
};

json check(const std::string& name, bool passed, double metric, double threshold) {
    return {{"name", name}, {"passed", passed}, {"metric", metric}, {"threshold", threshold}};
}

}  // namespace

std::string curve_to_csv(const Curve& curve) {
    std::string out = "x,probability,counts\n";
    for (const auto& p : curve.points) {
        out += format_number(p.x);
        out += ',';
        out += format_number(p.probability);
        out += ',';
        if (p.counts) out += std::to_string(*p.counts);
        out += '\n';
    }
    return out;
}

std::filesystem::path resolve_output_dir(const ExperimentConfig& config) {
    if (!config.output.empty()) return config.output;
    if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') return env;
    return ".";
}

RunResult run(const ExperimentConfig& config, const std::filesystem::path& output_dir) {
    config.validate();
    std::error_code ec;
    std::filesystem::create_directories(output_dir, ec);
    if (ec) throw Error(ErrorKind::io, "cannot create " + output_dir.string() + ": " + ec.message());

    RunResult result;
    Writer writer(output_dir, result);
    const Setup setup = config.to_setup();
    json summary = {{"experiment", std::string(to_string(config.experiment))}};
    json curves = json::array();
    json checks = json::array();

    try {
        switch (config.experiment) {
            case Experiment::scan_delay:
                curves.push_back(writer.curve("scan_delay", scan_delay(setup, config.scan), true));
                break;
            case Experiment::scan_mirror:
                curves.push_back(writer.curve("scan_mirror", scan_mirror(setup, config.scan), false));
                break;
            case Experiment::scan_plate:
                curves.push_back(writer.curve("scan_plate", scan_plate(setup, config.scan), false));
                break;
            case Experiment::scan_hyper: {
                const auto [zero, pi] = scan_hyper(setup, config.scan);
                curves.push_back(writer.curve("scan_hyper_theta0", zero, false));
                curves.push_back(writer.curve("scan_hyper_thetapi", pi, false));
                double worst = 0.0;
                for (std::size_t i = 0; i < zero.points.size(); ++i)
                    worst = std::max(worst, std::abs(zero.points[i].probability + pi.points[i].probability - 1.0));
                checks.push_back(check("anti_phase_sum", worst < 1e-12, worst, 1e-12));
                summary["model_visibility"] = config.source.v_pol * config.source.v_mom;
                summary["observed_visibility"] = kObservedHyperVisibility;
                break;
            }
            case Experiment::falsify: {
                const FalsificationReport report = falsification_suite(setup, config.scan);
                for (const auto& c : report.checks) {
                    curves.push_back(writer.curve("falsify_" + c.name, c.curve, false));
                    json entry = {{"name", c.name},
                                  {"passed", c.passed},
                                  {"blocked", c.blocked.names()},
                                  {"visibility", c.visibility},
                                  {"mean_probability", c.mean_probability},
                                  {"max_probability", c.max_probability}};
                    checks.push_back(entry);
                }
                summary["control_visibility"] = report.control_visibility;
                break;
            }
            case Experiment::oracle_check: {
                const OracleReport r = oracle_check(config.source, config.oracle_states, config.seed.value_or(0));
                checks.push_back(check("hyper_law", r.max_grid_law_error < 1e-12, r.max_grid_law_error, 1e-12));
                checks.push_back(
                    check("grid_oracle", r.max_grid_oracle_error < 1e-10, r.max_grid_oracle_error, 1e-10));
                checks.push_back(
                    check("random_oracle", r.max_random_oracle_error < 1e-10, r.max_random_oracle_error, 1e-10));
                summary["grid_points"] = r.grid_points;
                summary["random_states"] = r.random_states;
                summary["max_deviation"] = std::max(r.max_grid_oracle_error, r.max_random_oracle_error);
                break;
            }
            case Experiment::pol_correlation:
                curves.push_back(writer.curve("pol_correlation",
                                              scan_pol_correlation(setup, config.analyzer1, config.scan), false));
                break;
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::io) throw;
        throw e.with_context(std::string(to_string(config.experiment)));
    }

    bool all_passed = true;
    for (const auto& c : checks) all_passed = all_passed && c.at("passed").get<bool>();
    summary["curves"] = curves;
    summary["checks"] = checks;
    summary["checks_passed"] = all_passed;
    if (curves.size() == 1) {
        summary["visibility"] = curves[0]["visibility"];
        if (curves[0].contains("fwhm")) summary["fwhm"] = curves[0]["fwhm"];
        if (curves[0].contains("dip_visibility")) summary["dip_visibility"] = curves[0]["dip_visibility"];
    }

    result.summary = summary.dump(2) + "\n";
    const auto summary_path = output_dir / "summary.json";
    write_file(summary_path, result.summary);
    result.files.push_back(summary_path);
    result.exit_code = all_passed ? 0 : 1;
    return result;
}

}  // namespace hyperent
