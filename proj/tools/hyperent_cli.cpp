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

// hyperent: run hyper-entangled HOM interferometry experiments.
//
//   hyperent scan-hyper --v-pol 1 --v-mom 1 --output out/
//   hyperent falsify --config falsify.json
//   hyperent scan-delay --counts --seed 7

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyperent/config.hpp"
#include "hyperent/error.hpp"
#include "hyperent/runner.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Overrides {
    std::string config_path;
    std::optional<std::string> output;
    std::optional<std::uint64_t> seed;
    bool counts = false;
    bool dump_config = false;
    std::optional<double> mean_pairs, theta, phi, v_pol, v_mom, sigma_t, walkoff, mirror_period, compensator;
    std::optional<double> start, stop, step, analyzer1;
    std::optional<int> oracle_states;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hyperent::Error(hyperent::ErrorKind::io, "cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void add_options(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--config", o.config_path, "JSON configuration file");
    cmd.add_option("--output", o.output, "Output directory (default: $HYPERENT_OUTPUT_DIR or .)");
    cmd.add_option("--seed", o.seed, "RNG seed; required with --counts");
    cmd.add_flag("--counts", o.counts, "Attach Poisson counts to every point");
    cmd.add_option("--mean-pairs", o.mean_pairs, "Mean detected pairs per point for counts");
    cmd.add_option("--theta", o.theta, "Polarization phase (rad)");
    cmd.add_option("--phi", o.phi, "Momentum phase (rad)");
    cmd.add_option("--v-pol", o.v_pol, "Polarization interference visibility");
    cmd.add_option("--v-mom", o.v_mom, "Momentum interference visibility");
    cmd.add_option("--sigma-t", o.sigma_t, "RMS temporal width (s)");
    cmd.add_option("--walkoff", o.walkoff, "V-V cone walk-off advance (s)");
    cmd.add_option("--mirror-period", o.mirror_period, "Mirror displacement per 2 pi of theta (m)");
    cmd.add_option("--compensator", o.compensator, "Quartz compensator length (m)");
    cmd.add_option("--start", o.start, "Scan start");
    cmd.add_option("--stop", o.stop, "Scan stop");
    cmd.add_option("--step", o.step, "Scan step");
    cmd.add_option("--analyzer1", o.analyzer1, "Fixed analyzer angle for pol-correlation (rad)");
    cmd.add_option("--oracle-states", o.oracle_states, "Random states for oracle-check");
    cmd.add_flag("--dump-config", o.dump_config, "Print the effective configuration and exit");
}

/// Folds command-line overrides into the configuration document so that one
/// validation path covers both.
json merged_document(const std::string& subcommand, const Overrides& o) {
    json doc = json::object();
    if (!o.config_path.empty()) {
        const std::string text = read_file(o.config_path);
        doc = json::parse(text, nullptr, false);
        // Reparse through the library for a syntax error with line information.
        if (doc.is_discarded()) (void)hyperent::parse_config(text);
        if (!doc.is_object())
            throw hyperent::Error(hyperent::ErrorKind::config, "configuration must be a JSON object");
        if (doc.contains("experiment")) {
            const auto& e = doc["experiment"];
            const auto file_exp = e.is_string() ? hyperent::parse_experiment(e.get<std::string>()) : std::nullopt;
            if (file_exp != hyperent::parse_experiment(subcommand))
                throw hyperent::Error(hyperent::ErrorKind::config,
                                      "experiment: config file does not match subcommand '" + subcommand + "'");
        }
    }
    doc["experiment"] = std::string(hyperent::to_string(*hyperent::parse_experiment(subcommand)));
    auto set = [&](const char* section, const char* key, const std::optional<double>& v) {
        if (!v) return;
        if (section) doc[section][key] = *v;
        else doc[key] = *v;
    };
    set("state", "theta", o.theta);
    set("state", "phi", o.phi);
    set("source", "v_pol", o.v_pol);
    set("source", "v_mom", o.v_mom);
    set("source", "sigma_t", o.sigma_t);
    set("source", "walkoff", o.walkoff);
    set("source", "mirror_period", o.mirror_period);
    set(nullptr, "compensator_length", o.compensator);
    set("scan", "start", o.start);
    set("scan", "stop", o.stop);
    set("scan", "step", o.step);
    set(nullptr, "analyzer1", o.analyzer1);
    set(nullptr, "mean_pairs", o.mean_pairs);
    if (o.seed) doc["seed"] = *o.seed;
    if (o.counts) doc["counts"] = true;
    if (o.oracle_states) doc["oracle_states"] = *o.oracle_states;
    if (o.output) doc["output"] = *o.output;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyper-entangled two-photon HOM interferometry simulator"};
    app.require_subcommand(1);

    const std::map<std::string, std::string> commands = {
        {"scan-delay", "Coincidence vs path difference (dip/peak)"},
        {"scan-mirror", "Coincidence vs source mirror displacement"},
        {"scan-plate", "Coincidence vs momentum phase"},
        {"scan-hyper", "Hyper-entangled fringes for theta = 0 and pi"},
        {"falsify", "Mode-blocking falsification tests"},
        {"oracle-check", "Fast path vs brute-force oracle"},
        {"pol-correlation", "Polarization analyzer correlations without the beamsplitter"},
    };
    std::map<std::string, Overrides> overrides;
    for (const auto& [name, help] : commands) add_options(*app.add_subcommand(name, help), overrides[name]);

    CLI11_PARSE(app, argc, argv);

    const std::string name = app.get_subcommands().front()->get_name();
    const Overrides& o = overrides[name];
    try {
        const auto config = hyperent::parse_config(merged_document(name, o).dump());
        if (o.dump_config) {
            std::cout << hyperent::emit_config(config);
            return 0;
        }
        const auto dir = hyperent::resolve_output_dir(config);
        const auto result = hyperent::run(config, dir);
        std::cout << result.summary;
        for (const auto& f : result.files) std::cerr << "wrote " << f.string() << "\n";
        return result.exit_code;
    } catch (const hyperent::Error& e) {
        std::cerr << "hyperent: " << hyperent::to_string(e.kind()) << " error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "hyperent: " << e.what() << "\n";
        return 2;
    }
}
