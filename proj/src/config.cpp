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

#include "hyperent/config.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>

#include "hyperent/error.hpp"
#include "json.hpp"

namespace hyperent {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

Error config_error(const std::string& key, const std::string& message) {
    return Error(ErrorKind::config, key.empty() ? message : key + ": " + message);
}

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::string& prefix, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known) throw config_error(join(prefix, key), "unknown key");
    }
}

const json& require_object(const json& j, const std::string& key) {
    if (!j.is_object()) throw config_error(key, "expected an object");
    return j;
}

double read_number(const json& obj, const std::string& prefix, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw config_error(join(prefix, key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw config_error(join(prefix, key), "must be finite");
    return d;
}

bool read_bool(const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) throw config_error(key, "expected true or false");
    return obj.at(key).get<bool>();
}

std::string read_string(const json& obj, const std::string& prefix, const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_string()) throw config_error(join(prefix, key), "expected a string");
    return obj.at(key).get<std::string>();
}

ModeSet read_modes(const json& obj, const std::string& prefix, const char* key, const ModeSet& fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_array()) throw config_error(join(prefix, key), "expected a list of mode names");
    std::vector<std::string> names;
    for (const auto& n : v) {
        if (!n.is_string()) throw config_error(join(prefix, key), "expected a list of mode names");
        names.push_back(n.get<std::string>());
    }
    try {
        return ModeSet::parse(names);
    } catch (const Error& e) {
        throw config_error(join(prefix, key), e.what());
    }
}

std::string kind_name(StateKind k) {
    switch (k) {
        case StateKind::polarization: return "polarization";
        case StateKind::momentum: return "momentum";
        case StateKind::hyper: return "hyper";
    }
    return "?";
}

ElementOp parse_element(const json& e, const std::string& key) {
    require_object(e, key);
    const std::string kind = read_string(e, key, "kind", "");
    if (kind == "waveplate") {
        reject_unknown(e, key, {"kind", "modes", "retardance", "axis"});
        return element::Waveplate{read_modes(e, key, "modes", {}), read_number(e, key, "retardance", kPi),
                                  read_number(e, key, "axis", 0.0)};
    }
    if (kind == "phase_shift") {
        reject_unknown(e, key, {"kind", "modes", "phase"});
        return element::PhaseShift{read_modes(e, key, "modes", {}), read_number(e, key, "phase", 0.0)};
    }
    if (kind == "delay") {
        reject_unknown(e, key, {"kind", "modes", "tau"});
        return element::Delay{read_modes(e, key, "modes", {}), read_number(e, key, "tau", 0.0)};
    }
    if (kind == "quartz") {
        reject_unknown(e, key, {"kind", "length"});
        const double length = read_number(e, key, "length", 0.0);
        if (length < 0.0) throw config_error(key + ".length", "must be non-negative");
        return element::Quartz{length};
    }
    if (kind == "blocker") {
        reject_unknown(e, key, {"kind", "modes"});
        return element::Blocker{read_modes(e, key, "modes", {})};
    }
    if (kind == "beamsplitter")
        throw config_error(key + ".kind", "the beamsplitter is part of every setup and cannot be listed");
    throw config_error(key + ".kind", "unknown element kind '" + kind + "'");
}

json emit_element(const ElementOp& op) {
    struct Visitor {
        json operator()(const element::Waveplate& e) const {
            return {{"kind", "waveplate"}, {"modes", e.selector.names()}, {"retardance", e.retardance}, {"axis", e.axis}};
        }
        json operator()(const element::PhaseShift& e) const {
            return {{"kind", "phase_shift"}, {"modes", e.selector.names()}, {"phase", e.phase}};
        }
        json operator()(const element::Delay& e) const {
            return {{"kind", "delay"}, {"modes", e.selector.names()}, {"tau", e.tau}};
        }
        json operator()(const element::Quartz& e) const { return {{"kind", "quartz"}, {"length", e.length}}; }
        json operator()(const element::Blocker& e) const { return {{"kind", "blocker"}, {"modes", e.selector.names()}}; }
        json operator()(const element::BeamSplitter&) const { return {{"kind", "beamsplitter"}}; }
    };
    return std::visit(Visitor{}, op);
}

std::pair<int, int> line_and_column(std::string_view text, std::size_t byte) {
    int line = 1;
    int col = 1;
    const std::size_t end = std::min(text.size(), byte > 0 ? byte - 1 : 0);
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
        case Experiment::scan_delay: return "scan_delay";
        case Experiment::scan_mirror: return "scan_mirror";
        case Experiment::scan_plate: return "scan_plate";
        case Experiment::scan_hyper: return "scan_hyper";
        case Experiment::falsify: return "falsify";
        case Experiment::oracle_check: return "oracle_check";
        case Experiment::pol_correlation: return "pol_correlation";
    }
    return "?";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
    std::string n(name);
    std::replace(n.begin(), n.end(), '-', '_');
    for (auto e : {Experiment::scan_delay, Experiment::scan_mirror, Experiment::scan_plate, Experiment::scan_hyper,
                   Experiment::falsify, Experiment::oracle_check, Experiment::pol_correlation})
        if (to_string(e) == n) return e;
    return std::nullopt;
}

ExperimentConfig default_config(Experiment e) {
    ExperimentConfig c;
    c.experiment = e;
    switch (e) {
        case Experiment::scan_delay:
        case Experiment::falsify:
            c.state = {StateKind::momentum, BellFamily::psi, 0.0, 0.0};
            c.scan = ScanRange::default_delay();
            break;
        case Experiment::scan_mirror:
            c.state = {StateKind::polarization, BellFamily::psi, 0.0, 0.0};
            c.scan = ScanRange::default_mirror();
            break;
        case Experiment::scan_plate:
            c.state = {StateKind::momentum, BellFamily::psi, 0.0, 0.0};
            c.scan = ScanRange::default_phase();
            break;
        case Experiment::scan_hyper:
        case Experiment::oracle_check:
            c.state = {StateKind::hyper, BellFamily::psi, 0.0, 0.0};
            c.scan = ScanRange::default_phase();
            break;
        case Experiment::pol_correlation:
            c.state = {StateKind::polarization, BellFamily::phi, kPi, 0.0};
            c.scan = {0.0, kPi, kPi / 24.0};
            c.analyzer1 = kPi / 4.0;
            break;
    }
    return c;
}

void ExperimentConfig::validate() const {
    auto wrap = [](const char* key, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::config) throw;
            throw config_error(key, e.what());
        }
    };
    wrap("source", [&] { source.validate(); });
    wrap("scan", [&] { scan.validate(); });
    wrap("wiring", [&] { wiring.validate(); });
    if (!(compensator_length >= 0.0)) throw config_error("compensator_length", "must be non-negative");
    if (!(mean_pairs >= 0.0)) throw config_error("mean_pairs", "must be non-negative");
    if (oracle_states < 0) throw config_error("oracle_states", "must be non-negative");
    if (counts && !seed) throw config_error("seed", "required when counts are requested");

    const bool needs_theta = experiment == Experiment::scan_mirror;
    const bool needs_phi = experiment == Experiment::scan_plate;
    if (needs_theta && state.kind == StateKind::momentum)
        throw config_error("state.kind", "scan_mirror needs a polarization or hyper state");
    if (needs_phi && state.kind == StateKind::polarization)
        throw config_error("state.kind", "scan_plate needs a momentum or hyper state");
    if (experiment == Experiment::pol_correlation && state.kind != StateKind::polarization)
        throw config_error("state.kind", "pol_correlation needs a polarization state");
    if (experiment == Experiment::scan_hyper && state.kind != StateKind::hyper)
        throw config_error("state.kind", "scan_hyper needs the hyper state");
    if (experiment == Experiment::falsify && state.kind != StateKind::momentum)
        throw config_error("state.kind", "falsify runs on the momentum state");
}

Setup ExperimentConfig::to_setup() const {
    Setup s;
    s.state = state;
    s.source = source;
    s.compensator_length = compensator_length;
    s.elements = elements;
    s.wiring = wiring;
    s.counts = counts;
    s.mean_pairs = mean_pairs;
    s.seed = seed.value_or(0);
    return s;
}

ExperimentConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte);
        throw Error(ErrorKind::config, "syntax error at line " + std::to_string(line) + ", column " +
                                           std::to_string(col) + ": " + e.what());
    }
    if (!doc.is_object()) throw config_error("", "configuration must be a JSON object");
    reject_unknown(doc, "", {"experiment", "state", "source", "compensator_length", "elements", "wiring", "scan",
                             "analyzer1", "seed", "counts", "mean_pairs", "oracle_states", "output"});

    if (!doc.contains("experiment")) throw config_error("experiment", "missing required key");
    const std::string name = read_string(doc, "", "experiment", "");
    const auto experiment = parse_experiment(name);
    if (!experiment) throw config_error("experiment", "unknown experiment '" + name + "'");
    ExperimentConfig c = default_config(*experiment);

    if (doc.contains("state")) {
        const json& st = require_object(doc.at("state"), "state");
        reject_unknown(st, "state", {"kind", "family", "theta", "phi"});
        const std::string kind = read_string(st, "state", "kind", kind_name(c.state.kind));
        if (kind == "polarization") c.state.kind = StateKind::polarization;
        else if (kind == "momentum") c.state.kind = StateKind::momentum;
        else if (kind == "hyper") c.state.kind = StateKind::hyper;
        else throw config_error("state.kind", "unknown state kind '" + kind + "'");
        const std::string family =
            read_string(st, "state", "family", c.state.family == BellFamily::phi ? "phi" : "psi");
        if (family == "phi") c.state.family = BellFamily::phi;
        else if (family == "psi") c.state.family = BellFamily::psi;
        else throw config_error("state.family", "expected 'phi' or 'psi'");
        c.state.theta = read_number(st, "state", "theta", c.state.theta);
        c.state.phi = read_number(st, "state", "phi", c.state.phi);
    }
    if (doc.contains("source")) {
        const json& so = require_object(doc.at("source"), "source");
        reject_unknown(so, "source", {"lambda", "lambda_p", "sigma_t", "walkoff", "mirror_period", "v_pol", "v_mom",
                                      "filter_bandwidth", "coherence_time"});
        auto& p = c.source;
        p.lambda = read_number(so, "source", "lambda", p.lambda);
        p.lambda_p = read_number(so, "source", "lambda_p", p.lambda_p);
        p.sigma_t = read_number(so, "source", "sigma_t", p.sigma_t);
        p.walkoff = read_number(so, "source", "walkoff", p.walkoff);
        p.mirror_period = read_number(so, "source", "mirror_period", p.mirror_period);
        p.v_pol = read_number(so, "source", "v_pol", p.v_pol);
        p.v_mom = read_number(so, "source", "v_mom", p.v_mom);
        p.filter_bandwidth = read_number(so, "source", "filter_bandwidth", p.filter_bandwidth);
        p.coherence_time = read_number(so, "source", "coherence_time", p.coherence_time);
    }
    c.compensator_length = read_number(doc, "", "compensator_length", c.compensator_length);
    if (doc.contains("elements")) {
        const json& list = doc.at("elements");
        if (!list.is_array()) throw config_error("elements", "expected a list");
        for (std::size_t i = 0; i < list.size(); ++i)
            c.elements.push_back(parse_element(list[i], "elements[" + std::to_string(i) + "]"));
    }
    if (doc.contains("wiring")) {
        const json& w = require_object(doc.at("wiring"), "wiring");
        reject_unknown(w, "wiring", {"side1", "side2", "analyzers"});
        c.wiring.side1 = read_modes(w, "wiring", "side1", c.wiring.side1);
        c.wiring.side2 = read_modes(w, "wiring", "side2", c.wiring.side2);
        if (w.contains("analyzers") && !w.at("analyzers").is_null()) {
            const json& a = w.at("analyzers");
            if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number())
                throw config_error("wiring.analyzers", "expected [angle1, angle2] or null");
            c.wiring.analyzers = std::pair{a[0].get<double>(), a[1].get<double>()};
        }
    }
    if (doc.contains("scan")) {
        const json& sc = require_object(doc.at("scan"), "scan");
        reject_unknown(sc, "scan", {"start", "stop", "step"});
        c.scan.start = read_number(sc, "scan", "start", c.scan.start);
        c.scan.stop = read_number(sc, "scan", "stop", c.scan.stop);
        c.scan.step = read_number(sc, "scan", "step", c.scan.step);
        if (!(c.scan.step > 0.0)) throw config_error("scan.step", "must be positive");
    }
    c.analyzer1 = read_number(doc, "", "analyzer1", c.analyzer1);
    if (doc.contains("seed") && !doc.at("seed").is_null()) {
        const json& s = doc.at("seed");
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<std::int64_t>() >= 0))
            throw config_error("seed", "expected a non-negative integer");
        c.seed = s.get<std::uint64_t>();
    }
    c.counts = read_bool(doc, "counts", c.counts);
    c.mean_pairs = read_number(doc, "", "mean_pairs", c.mean_pairs);
    if (doc.contains("oracle_states")) {
        const json& n = doc.at("oracle_states");
        if (!n.is_number_integer() || n.get<std::int64_t>() < 0 || n.get<std::int64_t>() > 1000000)
            throw config_error("oracle_states", "expected an integer in [0, 1000000]");
        c.oracle_states = static_cast<int>(n.get<std::int64_t>());
    }
    c.output = read_string(doc, "", "output", c.output);

    c.validate();
    return c;
}

std::string emit_config(const ExperimentConfig& c) {
    json elements = json::array();
    for (const auto& e : c.elements) elements.push_back(emit_element(e));
    json analyzers = nullptr;
    if (c.wiring.analyzers) analyzers = json::array({c.wiring.analyzers->first, c.wiring.analyzers->second});
    const auto& p = c.source;
    json doc = {
        {"experiment", std::string(to_string(c.experiment))},
        {"state",
         {{"kind", kind_name(c.state.kind)},
          {"family", c.state.family == BellFamily::phi ? "phi" : "psi"},
          {"theta", c.state.theta},
          {"phi", c.state.phi}}},
        {"source",
         {{"lambda", p.lambda},
          {"lambda_p", p.lambda_p},
          {"sigma_t", p.sigma_t},
          {"walkoff", p.walkoff},
          {"mirror_period", p.mirror_period},
          {"v_pol", p.v_pol},
          {"v_mom", p.v_mom},
          {"filter_bandwidth", p.filter_bandwidth},
          {"coherence_time", p.coherence_time}}},
        {"compensator_length", c.compensator_length},
        {"elements", elements},
        {"wiring", {{"side1", c.wiring.side1.names()}, {"side2", c.wiring.side2.names()}, {"analyzers", analyzers}}},
        {"scan", {{"start", c.scan.start}, {"stop", c.scan.stop}, {"step", c.scan.step}}},
        {"analyzer1", c.analyzer1},
        {"seed", c.seed ? json(*c.seed) : json(nullptr)},
        {"counts", c.counts},
        {"mean_pairs", c.mean_pairs},
        {"oracle_states", c.oracle_states},
        {"output", c.output},
    };
    return doc.dump(2) + "\n";
}

}  // namespace hyperent
