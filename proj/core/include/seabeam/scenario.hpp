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

#ifndef SEABEAM_SCENARIO_HPP
#define SEABEAM_SCENARIO_HPP

#include "seabeam/beamformer.hpp"
#include "seabeam/channel.hpp"
#include "seabeam/csi.hpp"
#include "seabeam/link_budget.hpp"
#include "seabeam/rng.hpp"

#include <vector>

namespace seabeam {

// Full scenario description. Power levels are configured in dBm and
// converted to watts when the scenario is synthesized; every derived
// quantity downstream works in linear units.
struct SystemConfig {
    double carrier_hz = 1.6e8;
    double bandwidth_hz = 2.0e7;
    int antennas_tbs = 8; // M1
    int antennas_sat = 8; // M2
    int users_near = 4;   // K1
    int users_off = 6;    // K2
    double sat_max_gain_dbi = 55.0;
    double tbs_antenna_gain_dbi = 30.0;
    double receive_gain_dbi = 20.0;
    double noise_temperature_k = 300.0;
    double boltzmann_j_per_k = 1.38e-23;
    double orbit_height_m = 5.5e5;
    double noise_dbm = -110.0;
    double rain_log_mean_db = -2.6;
    double rain_log_variance_db = 1.63;
    double three_db_angle_deg = 0.4;
    double rician_factor = 10.0;
    double rate_near_bps_hz = 0.1; // gamma_1
    double rate_off_bps_hz = 0.1;  // gamma_2
    double tbs_power_dbm = 47.0;   // P_T (total)
    double sat_antenna_power_dbm = 40.0; // P_S (per antenna)
    double tbs_height_m = 50.0;
    double user_height_m = 10.0;
    double earth_radius_m = 6.371e6;
    double antenna_spacing_over_wavelength = 0.5;
    int fsl_distance_exponent = 1;
    double theta_near_deg = 45.0; // shared shore departure angle
    double theta_sat_deg = 20.0;  // shared satellite departure angle
    std::vector<double> theta_near_deg_per_user; // optional per-user override
    std::vector<double> theta_sat_deg_per_user;
    double near_distance_min_m = 1000.0;
    double near_distance_max_m = 4000.0;
    double sat_distance_m = 5.5e5;
    double off_boresight_min_deg = 0.05;
    double off_boresight_max_deg = 0.25;
    double near_sat_boresight_min_deg = 0.3;
    double near_sat_boresight_max_deg = 0.6;
    bool distance_jitter = true;
    double tidal_factor_near = 0.05; // delta_1 = epsilon_1 / theta_near
    double tidal_factor_sat = 0.05;  // delta_2 = epsilon_2 / theta_sat
};

// One synthesized realization: nominal channels, perturbation models for
// every uncertain link, error bounds and the QoS envelope.
struct Scenario {
    ChannelSet channels;
    std::vector<LinkModel> near_links; // shore->near, K1
    std::vector<LinkModel> off_links;  // satellite->off, K2
    UncertaintyModel uncertainty;
    QosSpec qos;
    Geometry geometry;
};

// Validates the cross-field constraints not already enforced by types.
// Throws std::invalid_argument naming the offending field.
void validate_config(const SystemConfig &cfg);

// Draws one channel realization. Distances and boresight offsets are
// jittered uniformly inside the configured brackets when distance_jitter is
// set, otherwise placed on deterministic grids; NLoS fading and rain are
// always fresh draws. Each link consumes its own substream derived from one
// value off `rng`, so growing a user or antenna count extends a scenario
// without redrawing the links it already had.
Scenario make_scenario(const SystemConfig &cfg, RandomStream &rng);

} // namespace seabeam

#endif // SEABEAM_SCENARIO_HPP
