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

#ifndef SEABEAM_CHANNEL_HPP
#define SEABEAM_CHANNEL_HPP

#include <Eigen/Dense>
#include <vector>

#include "seabeam/link_budget.hpp"
#include "seabeam/rng.hpp"

namespace seabeam {

// Uniform linear array response. Element k carries phase
// -(2 pi b k / lambda) cos(theta), so element 0 is always 1 and the squared
// norm equals the element count.
struct SteeringVector {
    Eigen::VectorXcd elements;
    double departure_angle_rad = 0.0;
    double spacing_over_wavelength = 0.5;
};

SteeringVector steering(double theta_rad, int antennas, double spacing_m, double wavelength_m);

// Nominal channels of one scenario realization plus per-user noise variances.
struct ChannelSet {
    std::vector<Eigen::VectorXcd> tbs_to_near; // K1 vectors of length M1
    std::vector<Eigen::VectorXcd> sat_to_off;  // K2 vectors of length M2
    std::vector<Eigen::VectorXcd> sat_to_near; // K1 vectors of length M2
    std::vector<double> noise_var_near;        // K1
    std::vector<double> noise_var_off;         // K2
};

struct BeamSet {
    std::vector<Eigen::VectorXcd> tbs_beams; // K1 vectors of length M1
    std::vector<Eigen::VectorXcd> sat_beams; // K2 vectors of length M2
};

// Two-ray shore channel: [lambda/(2 pi d) * sin(2 pi H_t H_u / (lambda d))]
// times the array response. Users beyond the LoS horizon are rejected.
double terrestrial_amplitude(double distance_m, const Geometry &geom);

Eigen::VectorXcd terrestrial_channel(double distance_m, const Geometry &geom, double theta_rad,
                                     int antennas);

// Rician space-to-sea channel, returned together with the pieces needed to
// rebuild it at a shifted departure angle with the same NLoS realization.
struct SatelliteChannel {
    Eigen::VectorXcd h;           // full channel at the nominal angle
    Eigen::VectorXcd nlos_scaled; // g sqrt(P) sqrt(1/(1+K)) h_nlos, fixed per realization
    double los_scale = 0.0;       // g sqrt(P) sqrt(K/(1+K))
    double theta_rad = 0.0;
    double rain_factor = 1.0;
};

SatelliteChannel satellite_channel(const Geometry &geom, const RainModel &rain,
                                   double receive_gain, double g_max, double rician_k,
                                   double theta_rad, int antennas, double sat_distance_m,
                                   double boresight_angle_rad, RandomStream &rng,
                                   int fsl_distance_exponent = 1);

double sinr_near(int i, const ChannelSet &ch, const BeamSet &beams);
double sinr_off(int m, const ChannelSet &ch, const BeamSet &beams);
double rate(double sinr);

} // namespace seabeam

#endif
