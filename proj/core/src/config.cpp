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

#include "seabeam/config.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace seabeam {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail_key(const std::string &key, const std::string &what) {
    throw std::invalid_argument("config key '" + key + "' " + what);
}

double as_number(const ordered_json &v, const std::string &key) {
    if (!v.is_number()) fail_key(key, "must be a number");
    double x = v.get<double>();
    if (!std::isfinite(x)) fail_key(key, "must be finite");
    return x;
}

int as_int(const ordered_json &v, const std::string &key) {
    if (v.is_number_integer()) return static_cast<int>(v.get<std::int64_t>());
    if (v.is_number()) {
        double x = v.get<double>();
        if (std::isfinite(x) && x == std::floor(x)) return static_cast<int>(x);
    }
    fail_key(key, "must be an integer");
}

std::uint64_t as_seed(const ordered_json &v, const std::string &key) {
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    fail_key(key, "must be a non-negative integer");
}

bool as_bool(const ordered_json &v, const std::string &key) {
    if (!v.is_boolean()) fail_key(key, "must be true or false");
    return v.get<bool>();
}

std::string as_string(const ordered_json &v, const std::string &key) {
    if (!v.is_string()) fail_key(key, "must be a string");
    return v.get<std::string>();
}

std::vector<double> as_number_array(const ordered_json &v, const std::string &key) {
    if (!v.is_array()) fail_key(key, "must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto &item : v) {
        if (!item.is_number()) fail_key(key, "must be an array of numbers");
        double x = item.get<double>();
        if (!std::isfinite(x)) fail_key(key, "must contain only finite numbers");
        out.push_back(x);
    }
    return out;
}

// One table drives both the parser and the default document, so the two can
// never drift apart.
struct KeyDef {
    const char *name;
    std::function<void(const ordered_json &, ExperimentConfig &)> read;
    std::function<ordered_json(const ExperimentConfig &)> write;
};

const std::vector<KeyDef> &key_table() {
    static const std::vector<KeyDef> table = [] {
        std::vector<KeyDef> t;
        auto add_num = [&t](const char *name, double SystemConfig::*f) {
            t.push_back({name,
                         [name, f](const ordered_json &v, ExperimentConfig &c) {
                             c.system.*f = as_number(v, name);
                         },
                         [f](const ExperimentConfig &c) { return ordered_json(c.system.*f); }});
        };
        auto add_int = [&t](const char *name, int SystemConfig::*f) {
            t.push_back({name,
                         [name, f](const ordered_json &v, ExperimentConfig &c) {
                             c.system.*f = as_int(v, name);
                         },
                         [f](const ExperimentConfig &c) { return ordered_json(c.system.*f); }});
        };
        auto add_bool = [&t](const char *name, bool SystemConfig::*f) {
            t.push_back({name,
                         [name, f](const ordered_json &v, ExperimentConfig &c) {
                             c.system.*f = as_bool(v, name);
                         },
                         [f](const ExperimentConfig &c) { return ordered_json(c.system.*f); }});
        };
        auto add_vec = [&t](const char *name, std::vector<double> SystemConfig::*f) {
            t.push_back({name,
                         [name, f](const ordered_json &v, ExperimentConfig &c) {
                             c.system.*f = as_number_array(v, name);
                         },
                         [f](const ExperimentConfig &c) { return ordered_json(c.system.*f); }});
        };
        auto add_pen_num = [&t](const char *name, double PenaltyConfig::*f) {
            t.push_back({name,
                         [name, f](const ordered_json &v, ExperimentConfig &c) {
                             c.penalty.*f = as_number(v, name);
                         },
                         [f](const ExperimentConfig &c) { return ordered_json(c.penalty.*f); }});
        };
        auto add_pen_int = [&t](const char *name, int PenaltyConfig::*f) {
            t.push_back({name,
                         [name, f](const ordered_json &v, ExperimentConfig &c) {
                             c.penalty.*f = as_int(v, name);
                         },
                         [f](const ExperimentConfig &c) { return ordered_json(c.penalty.*f); }});
        };

        add_num("carrier_hz", &SystemConfig::carrier_hz);
        add_num("bandwidth_hz", &SystemConfig::bandwidth_hz);
        add_int("antennas_tbs", &SystemConfig::antennas_tbs);
        add_int("antennas_sat", &SystemConfig::antennas_sat);
        add_int("users_near", &SystemConfig::users_near);
        add_int("users_off", &SystemConfig::users_off);
        add_num("sat_max_gain_dbi", &SystemConfig::sat_max_gain_dbi);
        add_num("tbs_antenna_gain_dbi", &SystemConfig::tbs_antenna_gain_dbi);
        add_num("receive_gain_dbi", &SystemConfig::receive_gain_dbi);
        add_num("noise_temperature_k", &SystemConfig::noise_temperature_k);
        add_num("boltzmann_j_per_k", &SystemConfig::boltzmann_j_per_k);
        add_num("orbit_height_m", &SystemConfig::orbit_height_m);
        add_num("noise_dbm", &SystemConfig::noise_dbm);
        add_num("rain_log_mean_db", &SystemConfig::rain_log_mean_db);
        add_num("rain_log_variance_db", &SystemConfig::rain_log_variance_db);
        add_num("three_db_angle_deg", &SystemConfig::three_db_angle_deg);
        add_num("rician_factor", &SystemConfig::rician_factor);
        add_num("rate_near_bps_hz", &SystemConfig::rate_near_bps_hz);
        add_num("rate_off_bps_hz", &SystemConfig::rate_off_bps_hz);
        add_num("tbs_power_dbm", &SystemConfig::tbs_power_dbm);
        add_num("sat_antenna_power_dbm", &SystemConfig::sat_antenna_power_dbm);
        add_num("tbs_height_m", &SystemConfig::tbs_height_m);
        add_num("user_height_m", &SystemConfig::user_height_m);
        add_num("earth_radius_m", &SystemConfig::earth_radius_m);
        add_num("antenna_spacing_over_wavelength",
                &SystemConfig::antenna_spacing_over_wavelength);
        add_int("fsl_distance_exponent", &SystemConfig::fsl_distance_exponent);
        add_num("theta_near_deg", &SystemConfig::theta_near_deg);
        add_num("theta_sat_deg", &SystemConfig::theta_sat_deg);
        add_vec("theta_near_deg_per_user", &SystemConfig::theta_near_deg_per_user);
        add_vec("theta_sat_deg_per_user", &SystemConfig::theta_sat_deg_per_user);
        add_num("near_distance_min_m", &SystemConfig::near_distance_min_m);
        add_num("near_distance_max_m", &SystemConfig::near_distance_max_m);
        add_num("sat_distance_m", &SystemConfig::sat_distance_m);
        add_num("off_boresight_min_deg", &SystemConfig::off_boresight_min_deg);
        add_num("off_boresight_max_deg", &SystemConfig::off_boresight_max_deg);
        add_num("near_sat_boresight_min_deg",
                &SystemConfig::near_sat_boresight_min_deg);
        add_num("near_sat_boresight_max_deg",
                &SystemConfig::near_sat_boresight_max_deg);
        add_bool("distance_jitter", &SystemConfig::distance_jitter);
        add_num("tidal_factor_near", &SystemConfig::tidal_factor_near);
        add_num("tidal_factor_sat", &SystemConfig::tidal_factor_sat);

        add_pen_num("initial_penalty", &PenaltyConfig::initial_penalty);
        add_pen_num("penalty_increment", &PenaltyConfig::penalty_increment);
        add_pen_int("max_iterations", &PenaltyConfig::max_iterations);
        add_pen_num("rank_gap_tol", &PenaltyConfig::rank_gap_tol);
        add_pen_num("objective_rel_tol", &PenaltyConfig::objective_rel_tol);
        add_pen_num("solver_tol", &PenaltyConfig::solver_tol);
        add_pen_int("solver_max_iterations", &PenaltyConfig::solver_max_iterations);

        t.push_back({"seed",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.seed = as_seed(v, "seed");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.seed); }});
        t.push_back({"trials",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.trials = as_int(v, "trials");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.trials); }});
        t.push_back({"sweep_axis",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.sweep_axis = as_string(v, "sweep_axis");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.sweep_axis); }});
        t.push_back({"sweep_values",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.sweep_values = as_number_array(v, "sweep_values");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.sweep_values); }});
        t.push_back({"error_samples",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.error_samples = as_int(v, "error_samples");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.error_samples); }});
        t.push_back({"angle_grid",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.angle_grid = as_int(v, "angle_grid");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.angle_grid); }});
        t.push_back({"exact_channel",
                     [](const ordered_json &v, ExperimentConfig &c) {
                         c.exact_channel = as_bool(v, "exact_channel");
                     },
                     [](const ExperimentConfig &c) { return ordered_json(c.exact_channel); }});
        return t;
    }();
    return table;
}

const std::set<std::string> &axis_names() {
    static const std::set<std::string> axes{
        "rate",         "users_near", "users_off", "antennas_tbs",
        "antennas_sat", "tidal_near", "tidal_off"};
    return axes;
}

void validate_harness(const ExperimentConfig &cfg) {
    if (cfg.trials < 1) fail_key("trials", "must be at least 1");
    if (cfg.error_samples < 1) fail_key("error_samples", "must be at least 1");
    if (cfg.angle_grid < 2) fail_key("angle_grid", "must be at least 2");
    if (axis_names().count(cfg.sweep_axis) == 0)
        fail_key("sweep_axis", "must be one of rate, users_near, users_off, "
                               "antennas_tbs, antennas_sat, tidal_near, tidal_off");
    if (cfg.sweep_values.empty()) fail_key("sweep_values", "must not be empty");
    for (std::size_t i = 1; i < cfg.sweep_values.size(); ++i)
        if (cfg.sweep_values[i] <= cfg.sweep_values[i - 1])
            fail_key("sweep_values", "must be strictly increasing");
    const bool integer_axis = cfg.sweep_axis == "users_near" ||
                              cfg.sweep_axis == "users_off" ||
                              cfg.sweep_axis == "antennas_tbs" ||
                              cfg.sweep_axis == "antennas_sat";
    for (double v : cfg.sweep_values) {
        if (integer_axis && (v < 1.0 || v != std::floor(v)))
            fail_key("sweep_values",
                     "must contain positive integers for axis " + cfg.sweep_axis);
        if (!integer_axis && v < 0.0)
            fail_key("sweep_values", "must contain non-negative values");
    }
    if (cfg.penalty.initial_penalty <= 0.0)
        fail_key("initial_penalty", "must be positive");
    if (cfg.penalty.penalty_increment <= 0.0)
        fail_key("penalty_increment", "must be positive");
    if (cfg.penalty.max_iterations < 1)
        fail_key("max_iterations", "must be at least 1");
    if (cfg.penalty.rank_gap_tol <= 0.0) fail_key("rank_gap_tol", "must be positive");
    if (cfg.penalty.objective_rel_tol <= 0.0)
        fail_key("objective_rel_tol", "must be positive");
    if (cfg.penalty.solver_tol <= 0.0) fail_key("solver_tol", "must be positive");
    if (cfg.penalty.solver_max_iterations < 1)
        fail_key("solver_max_iterations", "must be at least 1");
}

} // namespace

ExperimentConfig parse_config(const std::string &json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config root must be a JSON object");

    ExperimentConfig cfg;
    const auto &table = key_table();
    for (const auto &item : doc.items()) {
        const KeyDef *def = nullptr;
        for (const auto &candidate : table)
            if (item.key() == candidate.name) {
                def = &candidate;
                break;
            }
        if (def == nullptr)
            throw std::invalid_argument("config key '" + item.key() + "' is not recognized");
        def->read(item.value(), cfg);
    }
    validate_config(cfg.system);
    validate_harness(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string default_config_json() {
    ExperimentConfig cfg;
    ordered_json doc = ordered_json::object();
    for (const auto &def : key_table()) doc[def.name] = def.write(cfg);
    return doc.dump(2) + "\n";
}

} // namespace seabeam
