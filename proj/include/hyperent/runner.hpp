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

#include <filesystem>
#include <string>
#include <vector>

#include "hyperent/config.hpp"

namespace hyperent {

/// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "HYPERENT_OUTPUT_DIR";

/// Header `x,probability,counts`; numbers with 17 significant digits, counts
/// as plain integers (empty when not sampled).
std::string curve_to_csv(const Curve& curve);

/// config.output, else $HYPERENT_OUTPUT_DIR, else the working directory.
std::filesystem::path resolve_output_dir(const ExperimentConfig& config);

struct RunResult {
    int exit_code = 0;        // 0 when every check passed, 1 otherwise
    std::string summary;      // JSON document, also written to summary.json
    std::vector<std::filesystem::path> files;
};

/// Runs the experiment and writes one CSV per curve plus summary.json into
/// `output_dir` (created if missing).
RunResult run(const ExperimentConfig& config, const std::filesystem::path& output_dir);

}  // namespace hyperent
