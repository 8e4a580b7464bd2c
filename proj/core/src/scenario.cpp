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

#include "seabeam/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seabeam {

namespace {

void require(bool ok, const std::string &field, const std::string &what) {
    if (!ok)
        throw std::invalid_argument("config field " + field + " " + what);
}

double grid_point(double lo, double hi, int index, int count) {
    if (count <= 1)
        return lo;
    return lo + (hi - lo) * static_cast<double>(index) / static_cast<double>(count - 1);
}

} // namespace

void validate_config(const SystemConfig &cfg) {
    require(cfg.carrier_hz > 0.0, "carrier_hz", "must be > 0");
    require(cfg.bandwidth_hz > 0.0, "bandwidth_hz", "must be > 0");
    require(cfg.antennas_tbs >= 1, "antennas_tbs", "must be >= 1");
    require(cfg.antennas_sat >= 1, "antennas_sat", "must be >= 1");
    require(cfg.users_near >= 0, "users_near", "must be >= 0");
    require(cfg.users_off >= 0, "users_off", "must be >= 0");
    require(cfg.noise_temperature_k > 0.0, "noise_temperature_k", "must be > 0");
    require(cfg.boltzmann_j_per_k > 0.0, "boltzmann_j_per_k", "must be > 0");
    require(cfg.orbit_height_m > 0.0, "orbit_height_m", "must be > 0");
    require(cfg.rain_log_variance_db >= 0.0, "rain_log_variance_db", "must be >= 0");
    require(cfg.three_db_angle_deg > 0.0 && cfg.three_db_angle_deg < 90.0,
            "three_db_angle_deg", "must lie in (0, 90)");
    require(cfg.rician_factor >= 0.0, "rician_factor", "must be >= 0");
    require(cfg.rate_near_bps_hz >= 0.0, "rate_near_bps_hz", "must be >= 0");
    require(cfg.rate_off_bps_hz >= 0.0, "rate_off_bps_hz", "must be >= 0");
    require(cfg.tbs_height_m > 0.0, "tbs_height_m", "must be > 0");
    require(cfg.user_height_m > 0.0, "user_height_m", "must be > 0");
    require(cfg.earth_radius_m > 0.0, "earth_radius_m", "must be > 0");
    require(cfg.antenna_spacing_over_wavelength > 0.0, "antenna_spacing_over_wavelength",
            "must be > 0");
    require(cfg.fsl_distance_exponent == 1 || cfg.fsl_distance_exponent == 2,
            "fsl_distance_exponent", "must be 1 or 2");
    require(cfg.near_distance_min_m > 0.0, "near_distance_min_m", "must be > 0");
    require(cfg.near_distance_max_m >= cfg.near_distance_min_m, "near_distance_max_m",
            "must be >= near_distance_min_m");
    require(cfg.sat_distance_m > 0.0, "sat_distance_m", "must be > 0");
    require(cfg.off_boresight_min_deg >= 0.0, "off_boresight_min_deg", "must be >= 0");
    require(cfg.off_boresight_max_deg >= cfg.off_boresight_min_deg, "off_boresight_max_deg",
            "must be >= off_boresight_min_deg");
    require(cfg.near_sat_boresight_min_deg >= 0.0, "near_sat_boresight_min_deg",
            "must be >= 0");
    require(cfg.near_sat_boresight_max_deg >= cfg.near_sat_boresight_min_deg,
            "near_sat_boresight_max_deg", "must be >= near_sat_boresight_min_deg");
    require(cfg.tidal_factor_near >= 0.0, "tidal_factor_near", "must be >= 0");
    require(cfg.tidal_factor_sat >= 0.0, "tidal_factor_sat", "must be >= 0");
    require(cfg.theta_near_deg_per_user.empty() ||
                cfg.theta_near_deg_per_user.size() ==
                    static_cast<std::size_t>(cfg.users_near),
            "theta_near_deg_per_user", "must be empty or have one entry per near-shore user");
    require(cfg.theta_sat_deg_per_user.empty() ||
                cfg.theta_sat_deg_per_user.size() == static_cast<std::size_t>(cfg.users_off),
            "theta_sat_deg_per_user", "must be empty or have one entry per off-shore user");
}

Scenario make_scenario(const SystemConfig &cfg, RandomStream &rng) {
    validate_config(cfg);

    Scenario sc;
    const double lambda = speed_of_light_mps / cfg.carrier_hz;
    const double spacing = cfg.antenna_spacing_over_wavelength * lambda;
    const int k1 = cfg.users_near;
    const int k2 = cfg.users_off;
    const int m1 = cfg.antennas_tbs;
    const int m2 = cfg.antennas_sat;

    Geometry &geom = sc.geometry;
    geom.tbs_height_m = cfg.tbs_height_m;
    geom.user_height_m = cfg.user_height_m;
    geom.earth_radius_m = cfg.earth_radius_m;
    geom.carrier_wavelength_m = lambda;
    geom.antenna_spacing_m = spacing;
    geom.three_db_angle_rad = deg_to_rad(cfg.three_db_angle_deg);

    const double noise_w = dbm_to_watts(cfg.noise_dbm);
    const double g_max = db_to_linear(cfg.sat_max_gain_dbi);
    const double g_rx = db_to_linear(cfg.receive_gain_dbi);
    const RainModel rain{cfg.rain_log_mean_db, cfg.rain_log_variance_db};

    // Every link draws from its own substream so that raising a user or
    // antenna count leaves all previously drawn links bit-identical. Sweeps
    // along those axes then compare nested problems on common randomness.
    const std::uint64_t base = rng.next_u64();

    // Shore links.
    for (int i = 0; i < k1; ++i) {
        RandomStream sub(derive_seed(base, 1, static_cast<std::uint64_t>(i)));
        const double d = cfg.distance_jitter
                             ? sub.uniform(cfg.near_distance_min_m, cfg.near_distance_max_m)
                             : cfg.near_distance_min_m +
                                   (cfg.near_distance_max_m - cfg.near_distance_min_m) *
                                       (static_cast<double>(i) + 0.5) /
                                       static_cast<double>(k1);
        geom.tbs_user_distance_m.push_back(d);
        const double theta = deg_to_rad(cfg.theta_near_deg_per_user.empty()
                                            ? cfg.theta_near_deg
                                            : cfg.theta_near_deg_per_user[i]);
        const double amp = terrestrial_amplitude(d, geom);
        sc.near_links.push_back(
            make_link_model(amp, Eigen::VectorXcd(), theta, spacing, lambda, m1));
        sc.channels.tbs_to_near.push_back(sc.near_links.back().nominal);
        sc.channels.noise_var_near.push_back(noise_w);
    }

    // Satellite service links.
    for (int m = 0; m < k2; ++m) {
        RandomStream sub(derive_seed(base, 2, static_cast<std::uint64_t>(m)));
        geom.sat_user_distance_m.push_back(cfg.sat_distance_m);
        const double boresight = deg_to_rad(
            cfg.distance_jitter
                ? sub.uniform(cfg.off_boresight_min_deg, cfg.off_boresight_max_deg)
                : grid_point(cfg.off_boresight_min_deg, cfg.off_boresight_max_deg, m, k2));
        geom.boresight_angle_rad.push_back(boresight);
        const double theta = deg_to_rad(cfg.theta_sat_deg_per_user.empty()
                                            ? cfg.theta_sat_deg
                                            : cfg.theta_sat_deg_per_user[m]);
        const SatelliteChannel link =
            satellite_channel(geom, rain, g_rx, g_max, cfg.rician_factor, theta, m2,
                              cfg.sat_distance_m, boresight, sub, cfg.fsl_distance_exponent);
        sc.off_links.push_back(
            make_link_model(link.los_scale, link.nlos_scaled, theta, spacing, lambda, m2));
        sc.channels.sat_to_off.push_back(sc.off_links.back().nominal);
        sc.channels.noise_var_off.push_back(noise_w);
    }

    // Satellite interference into near-shore users; their boresight offsets
    // are larger because the satellite points at its own users.
    for (int i = 0; i < k1; ++i) {
        if (k2 == 0) {
            sc.channels.sat_to_near.push_back(Eigen::VectorXcd::Zero(m2));
            continue;
        }
        RandomStream sub(derive_seed(base, 3, static_cast<std::uint64_t>(i)));
        const double boresight = deg_to_rad(
            cfg.distance_jitter
                ? sub.uniform(cfg.near_sat_boresight_min_deg, cfg.near_sat_boresight_max_deg)
                : grid_point(cfg.near_sat_boresight_min_deg, cfg.near_sat_boresight_max_deg,
                             i, k1));
        const double theta = deg_to_rad(cfg.theta_sat_deg);
        const SatelliteChannel link =
            satellite_channel(geom, rain, g_rx, g_max, cfg.rician_factor, theta, m2,
                              cfg.sat_distance_m, boresight, sub, cfg.fsl_distance_exponent);
        sc.channels.sat_to_near.push_back(link.h);
    }

    // Error bounds: shared per-transmitter angle error, per-user channel
    // radii through each link's sensitivity norm.
    UncertaintyModel &unc = sc.uncertainty;
    unc.tidal_factor_tbs = cfg.tidal_factor_near;
    unc.tidal_factor_sat = cfg.tidal_factor_sat;
    unc.angle_bound_tbs = cfg.tidal_factor_near * deg_to_rad(cfg.theta_near_deg);
    unc.angle_bound_sat = cfg.tidal_factor_sat * deg_to_rad(cfg.theta_sat_deg);
    for (int i = 0; i < k1; ++i) {
        const LinkModel &link = sc.near_links[i];
        const SteeringVector a = steering(link.theta_rad, m1, spacing, lambda);
        const ErrorBound eb =
            channel_error_bound(a, unc.angle_bound_tbs, LinkKind::terrestrial, link.amplitude);
        unc.sensitivity_norm_tbs.push_back(eb.xi);
        unc.channel_radius_tbs.push_back(eb.rho);
    }
    for (int m = 0; m < k2; ++m) {
        const LinkModel &link = sc.off_links[m];
        const SteeringVector a = steering(link.theta_rad, m2, spacing, lambda);
        const ErrorBound eb =
            channel_error_bound(a, unc.angle_bound_sat, LinkKind::satellite, link.amplitude);
        unc.sensitivity_norm_sat.push_back(eb.xi);
        unc.channel_radius_sat.push_back(eb.rho);
    }

    sc.qos.rate_near = cfg.rate_near_bps_hz;
    sc.qos.rate_off = cfg.rate_off_bps_hz;
    sc.qos.tbs_power_cap_w = dbm_to_watts(cfg.tbs_power_dbm);
    sc.qos.sat_antenna_cap_w = dbm_to_watts(cfg.sat_antenna_power_dbm);
    return sc;
}

} // namespace seabeam
