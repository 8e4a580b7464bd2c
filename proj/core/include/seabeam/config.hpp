// SPDX-License-Identifier: Apache-2.0
//
// seabeam - robust downlink beamforming for integrated satellite-terrestrial
// maritime communication systems
// Copyright (C) 2026 seabeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SEABEAM_CONFIG_HPP
#define SEABEAM_CONFIG_HPP

#include "seabeam/beamformer.hpp"
#include "seabeam/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seabeam {

// Everything one experiment needs: the scenario, solver knobs and the
// harness controls (sweep axis, Monte Carlo sizes, seeding).
struct ExperimentConfig {
    SystemConfig system;
    PenaltyConfig penalty;
    std::uint64_t seed = 1;
    int trials = 50;
    std::string sweep_axis = "rate";
    std::vector<double> sweep_values{0.05, 0.1, 0.15};
    int error_samples = 100; // angle-error draws per outage realization
    int angle_grid = 21;     // worst-case verification grid size
    bool exact_channel = false;
};

// Parses a flat JSON object. Unknown keys, wrong types and out-of-range
// values raise std::invalid_argument naming the offending key.
ExperimentConfig parse_config(const std::string &json_text);

// Reads and parses a config file. A missing or unreadable file raises
// std::runtime_error.
ExperimentConfig load_config(const std::string &path);

// Canonical config document with every supported key at its default.
std::string default_config_json();

} // namespace seabeam

#endif // SEABEAM_CONFIG_HPP
