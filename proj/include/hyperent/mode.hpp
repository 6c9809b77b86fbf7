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

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace hyperent {

enum class Path : std::uint8_t { a = 0, b = 1 };
enum class Arm : std::uint8_t { one = 0, two = 1 };
enum class Pol : std::uint8_t { H = 0, V = 1 };
enum class Stage : std::uint8_t { input = 0, output = 1 };

/// One electromagnetic mode. Field order defines the canonical total order
/// (path, arm, pol, stage).
struct Mode {
    Path path = Path::a;
    Arm arm = Arm::one;
    Pol pol = Pol::H;
    Stage stage = Stage::input;

    auto operator<=>(const Mode&) const = default;

    /// Dense index in [0, 16).
    constexpr int index() const {
        return (static_cast<int>(path) << 3) | (static_cast<int>(arm) << 2) |
               (static_cast<int>(pol) << 1) | static_cast<int>(stage);
    }
    static constexpr Mode from_index(int i) {
        return Mode{static_cast<Path>((i >> 3) & 1), static_cast<Arm>((i >> 2) & 1),
                    static_cast<Pol>((i >> 1) & 1), static_cast<Stage>(i & 1)};
    }

    /// e.g. "a1H" for an input mode, "b2'V" for an output mode.
    std::string name() const;
};

inline constexpr int kModeCount = 16;

/// Spatial mode: a mode with polarization forgotten.
struct SpatialMode {
    Path path = Path::a;
    Arm arm = Arm::one;
    Stage stage = Stage::input;

    auto operator<=>(const SpatialMode&) const = default;

    Mode with(Pol pol) const { return Mode{path, arm, pol, stage}; }
    std::string name() const;
};

inline SpatialMode spatial(const Mode& m) { return SpatialMode{m.path, m.arm, m.stage}; }

std::array<Mode, 8> input_modes();
std::array<Mode, 8> output_modes();

/// A set of modes, used as the selector of optical elements and detectors.
class ModeSet {
public:
    ModeSet() = default;
    ModeSet(std::initializer_list<Mode> modes);

    static ModeSet all();
    static ModeSet none() { return {}; }
    /// Both polarizations of each listed spatial mode.
    static ModeSet spatial(std::initializer_list<SpatialMode> modes);
    /// All modes of one polarization, at the given stage.
    static ModeSet polarization(Pol pol, Stage stage = Stage::input);
    /// All modes of one arm, both polarizations, at the given stage.
    static ModeSet arm(Arm arm, Stage stage = Stage::input);

    /// Parses names such as "a1" (both polarizations), "a1V", "b2'" or "b2'H".
    static ModeSet parse(const std::vector<std::string>& names);
    /// Inverse of parse: spatial names where both polarizations are present.
    std::vector<std::string> names() const;

    bool contains(const Mode& m) const { return bits_.test(static_cast<std::size_t>(m.index())); }
    /// True if any polarization of the mode's spatial mode is selected.
    bool touches_spatial(const Mode& m) const;
    bool empty() const { return bits_.none(); }
    std::size_t size() const { return bits_.count(); }
    void insert(const Mode& m) { bits_.set(static_cast<std::size_t>(m.index())); }

    ModeSet operator|(const ModeSet& o) const { return ModeSet(bits_ | o.bits_); }
    ModeSet operator&(const ModeSet& o) const { return ModeSet(bits_ & o.bits_); }
    bool is_subset_of(const ModeSet& o) const { return (bits_ & ~o.bits_).none(); }
    bool operator==(const ModeSet&) const = default;

private:
    explicit ModeSet(std::bitset<kModeCount> bits) : bits_(bits) {}
    std::bitset<kModeCount> bits_;
};

}  // namespace hyperent
