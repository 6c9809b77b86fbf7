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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperent/experiments.hpp"

namespace hyperent {

enum class Experiment { scan_delay, scan_mirror, scan_plate, scan_hyper, falsify, oracle_check, pol_correlation };

std::string_view to_string(Experiment e);
/// Accepts both "scan_delay" and the CLI spelling "scan-delay".
std::optional<Experiment> parse_experiment(std::string_view name);

/// A fully specified run. Produced by parse_config or default_config; every
/// field is populated.
struct ExperimentConfig {
    Experiment experiment = Experiment::scan_delay;
    StateSpec state;
    SourceParams source;
    double compensator_length = 0.018;
    std::vector<ElementOp> elements;
    DetectorWiring wiring;
    ScanRange scan = ScanRange::default_delay();
    double analyzer1 = 0.0;  // pol_correlation only
    std::optional<std::uint64_t> seed;
    bool counts = false;
    double mean_pairs = 1e4;
    int oracle_states = 100;
    std::string output;  // empty: HYPERENT_OUTPUT_DIR, then "."

    /// Throws Error(config) naming the offending key.
    void validate() const;
    Setup to_setup() const;
    bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig default_config(Experiment e);

/// Parses the JSON configuration document. Missing keys take the defaults of
/// the named experiment; unknown keys are rejected. Syntax errors report
/// line and column.
ExperimentConfig parse_config(std::string_view text);

/// Canonical JSON document with every key present.
std::string emit_config(const ExperimentConfig& config);

}  // namespace hyperent
