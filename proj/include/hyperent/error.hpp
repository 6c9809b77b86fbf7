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

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperent {

enum class ErrorKind {
    invalid_parameter,
    incompatible_state,
    zero_state,
    invalid_stage,
    invalid_wiring,
    shape,
    config,
    io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers can tell
/// e.g. a fully blocked state apart from a malformed argument.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Same kind, message prefixed with `context: `.
    Error with_context(std::string_view context) const {
        return Error(kind_, std::string(context) + ": " + what());
    }

private:
    ErrorKind kind_;
};

}  // namespace hyperent
