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

#ifndef SEABEAM_LINK_BUDGET_HPP
#define SEABEAM_LINK_BUDGET_HPP

#include <vector>

#include "seabeam/rng.hpp"
#include "seabeam/units.hpp"

namespace seabeam {

// Shared geometry of one scenario. Per-user distances and boresight angles
// are indexed by user; the remaining fields are common to all links.
struct Geometry {
    double tbs_height_m = 50.0;
    double user_height_m = 10.0;
    double earth_radius_m = default_earth_radius_m;
    double carrier_wavelength_m = speed_of_light_mps / 1.6e8;
    double antenna_spacing_m = 0.5 * speed_of_light_mps / 1.6e8;
    double three_db_angle_rad = deg_to_rad(0.4);
    std::vector<double> tbs_user_distance_m;
    std::vector<double> sat_user_distance_m;
    std::vector<double> boresight_angle_rad;
};

// Log-normal rain attenuation: ln(r_dB) ~ N(log_mean_db, log_variance_db).
struct RainModel {
    double log_mean_db = -2.6;
    double log_variance_db = 1.63;
};

// Horizon-limited maximum line-of-sight distance between two antennas of
// heights H_t and H_r over a sphere of radius R_e.
double max_los_distance(double tbs_height_m, double user_height_m, double earth_radius_m);

// Free-space loss factor lambda^2 / ((4 pi)^2 * D^exponent). The default
// exponent of 1 matches the model this library implements; exponent 2 is the
// textbook form and is available for sensitivity studies.
double free_space_loss(double wavelength_m, double distance_m, int distance_exponent = 1);

// First-kind Bessel functions used by the satellite beam pattern. Power
// series below x = 12, normalized downward recurrence above, which keeps the
// relative error near 1e-14 over (0, 20].
double bessel_j1(double x);
double bessel_j3(double x);

// Satellite transmit gain toward an angle phi_sm off boresight:
// G_max * (J1(psi)/(2 psi) + 36 J3(psi)/psi^3)^2 with
// psi = 2.07123 sin(phi_sm)/sin(phi_3dB). Below psi = 1e-6 the analytic
// limit branch is used since both terms divide by powers of psi.
double satellite_beam_gain(double g_max, double boresight_angle_rad, double three_db_angle_rad);

// Draws one bulk rain amplitude factor in (0, 1]: x ~ N(mu, sigma^2),
// r_dB = exp(x), factor = 10^(-r_dB/20).
double sample_rain_attenuation(const RainModel &model, RandomStream &rng);

} // namespace seabeam

#endif
