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

#include "hyperent/mode.hpp"

#include "hyperent/error.hpp"

namespace hyperent {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid parameter";
        case ErrorKind::incompatible_state: return "incompatible state";
        case ErrorKind::zero_state: return "zero state";
        case ErrorKind::invalid_stage: return "invalid stage";
        case ErrorKind::invalid_wiring: return "invalid wiring";
        case ErrorKind::shape: return "curve shape";
        case ErrorKind::config: return "configuration";
        case ErrorKind::io: return "i/o";
    }
    return "unknown";
}

std::string SpatialMode::name() const {
    std::string s;
    s += path == Path::a ? 'a' : 'b';
    s += arm == Arm::one ? '1' : '2';
    if (stage == Stage::output) s += '\'';
    return s;
}

std::string Mode::name() const {
    return spatial(*this).name() + (pol == Pol::H ? "H" : "V");
}

std::array<Mode, 8> input_modes() {
    std::array<Mode, 8> out{};
    std::size_t n = 0;
    for (int i = 0; i < kModeCount; ++i) {
        const Mode m = Mode::from_index(i);
        if (m.stage == Stage::input) out[n++] = m;
    }
    return out;
}

std::array<Mode, 8> output_modes() {
    std::array<Mode, 8> out{};
    std::size_t n = 0;
    for (int i = 0; i < kModeCount; ++i) {
        const Mode m = Mode::from_index(i);
        if (m.stage == Stage::output) out[n++] = m;
    }
    return out;
}

ModeSet::ModeSet(std::initializer_list<Mode> modes) {
    for (const auto& m : modes) insert(m);
}

ModeSet ModeSet::all() {
    ModeSet s;
    s.bits_.set();
    return s;
}

ModeSet ModeSet::spatial(std::initializer_list<SpatialMode> modes) {
    ModeSet s;
    for (const auto& sm : modes) {
        s.insert(sm.with(Pol::H));
        s.insert(sm.with(Pol::V));
    }
    return s;
}

ModeSet ModeSet::polarization(Pol pol, Stage stage) {
    ModeSet s;
    for (int i = 0; i < kModeCount; ++i) {
        const Mode m = Mode::from_index(i);
        if (m.pol == pol && m.stage == stage) s.insert(m);
    }
    return s;
}

ModeSet ModeSet::arm(Arm arm, Stage stage) {
    ModeSet s;
    for (int i = 0; i < kModeCount; ++i) {
        const Mode m = Mode::from_index(i);
        if (m.arm == arm && m.stage == stage) s.insert(m);
    }
    return s;
}

bool ModeSet::touches_spatial(const Mode& m) const {
    return contains(Mode{m.path, m.arm, Pol::H, m.stage}) ||
           contains(Mode{m.path, m.arm, Pol::V, m.stage});
}

ModeSet ModeSet::parse(const std::vector<std::string>& names) {
    ModeSet s;
    for (const auto& name : names) {
        auto bad = [&] {
            return Error(ErrorKind::invalid_parameter, "unknown mode name '" + name + "'");
        };
        if (name.size() < 2) throw bad();
        SpatialMode sm;
        if (name[0] == 'a') sm.path = Path::a;
        else if (name[0] == 'b') sm.path = Path::b;
        else throw bad();
        if (name[1] == '1') sm.arm = Arm::one;
        else if (name[1] == '2') sm.arm = Arm::two;
        else throw bad();
        std::size_t pos = 2;
        if (pos < name.size() && name[pos] == '\'') {
            sm.stage = Stage::output;
            ++pos;
        }
        if (pos == name.size()) {
            s.insert(sm.with(Pol::H));
            s.insert(sm.with(Pol::V));
        } else if (pos + 1 == name.size() && (name[pos] == 'H' || name[pos] == 'V')) {
            s.insert(sm.with(name[pos] == 'H' ? Pol::H : Pol::V));
        } else {
            throw bad();
        }
    }
    return s;
}

std::vector<std::string> ModeSet::names() const {
    std::vector<std::string> out;
    for (int p = 0; p < 2; ++p)
        for (int a = 0; a < 2; ++a)
            for (int st = 0; st < 2; ++st) {
                const SpatialMode sm{static_cast<Path>(p), static_cast<Arm>(a),
                                     static_cast<Stage>(st)};
                const bool h = contains(sm.with(Pol::H));
                const bool v = contains(sm.with(Pol::V));
                if (h && v) out.push_back(sm.name());
                else if (h) out.push_back(sm.with(Pol::H).name());
                else if (v) out.push_back(sm.with(Pol::V).name());
            }
    return out;
}

}  // namespace hyperent
