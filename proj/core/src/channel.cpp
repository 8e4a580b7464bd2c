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

#include "seabeam/channel.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace seabeam {

SteeringVector steering(double theta_rad, int antennas, double spacing_m, double wavelength_m) {
    if (antennas < 1)
        throw std::domain_error("steering: antenna count must be >= 1");
    if (spacing_m <= 0.0 || wavelength_m <= 0.0)
        throw std::domain_error("steering: spacing and wavelength must be > 0");
    SteeringVector out;
    out.departure_angle_rad = theta_rad;
    out.spacing_over_wavelength = spacing_m / wavelength_m;
    out.elements.resize(antennas);
    const double step = -2.0 * pi * out.spacing_over_wavelength * std::cos(theta_rad);
    for (int k = 0; k < antennas; ++k)
        out.elements[k] = std::polar(1.0, step * static_cast<double>(k));
    return out;
}

double terrestrial_amplitude(double distance_m, const Geometry &geom) {
    if (distance_m <= 0.0)
        throw std::domain_error("terrestrial_channel: distance must be > 0");
    const double horizon =
        max_los_distance(geom.tbs_height_m, geom.user_height_m, geom.earth_radius_m);
    if (distance_m > horizon)
        throw std::domain_error("terrestrial_channel: user beyond the LoS horizon");
    const double lambda = geom.carrier_wavelength_m;
    return lambda / (2.0 * pi * distance_m) *
           std::sin(2.0 * pi * geom.tbs_height_m * geom.user_height_m / (lambda * distance_m));
}

Eigen::VectorXcd terrestrial_channel(double distance_m, const Geometry &geom, double theta_rad,
                                     int antennas) {
    const double amp = terrestrial_amplitude(distance_m, geom);
    const SteeringVector a =
        steering(theta_rad, antennas, geom.antenna_spacing_m, geom.carrier_wavelength_m);
    return amp * a.elements;
}

SatelliteChannel satellite_channel(const Geometry &geom, const RainModel &rain,
                                   double receive_gain, double g_max, double rician_k,
                                   double theta_rad, int antennas, double sat_distance_m,
                                   double boresight_angle_rad, RandomStream &rng,
                                   int fsl_distance_exponent) {
    if (rician_k < 0.0)
        throw std::domain_error("satellite_channel: Rician factor must be >= 0");
    const double lambda = geom.carrier_wavelength_m;
    const double fsl = free_space_loss(lambda, sat_distance_m, fsl_distance_exponent);
    const double beam_gain =
        satellite_beam_gain(g_max, boresight_angle_rad, geom.three_db_angle_rad);
    const double rain_factor = sample_rain_attenuation(rain, rng);
    const double g = rain_factor * std::sqrt(fsl * receive_gain);
    const double scale = g * std::sqrt(beam_gain);

    SatelliteChannel out;
    out.theta_rad = theta_rad;
    out.rain_factor = rain_factor;
    out.nlos_scaled.resize(antennas);
    const double nlos_coeff = scale * std::sqrt(1.0 / (1.0 + rician_k));
    for (int k = 0; k < antennas; ++k)
        out.nlos_scaled[k] = nlos_coeff * rng.cnormal();
    out.los_scale = scale * std::sqrt(rician_k / (1.0 + rician_k));
    const SteeringVector a = steering(theta_rad, antennas, geom.antenna_spacing_m, lambda);
    out.h = out.nlos_scaled + out.los_scale * a.elements;
    return out;
}

namespace {

double beam_power(const Eigen::VectorXcd &h, const Eigen::VectorXcd &w) {
    if (h.size() != w.size())
        throw std::invalid_argument("sinr: channel/beam dimension mismatch");
    const std::complex<double> v = h.adjoint() * w;
    return std::norm(v);
}

} // namespace

double sinr_near(int i, const ChannelSet &ch, const BeamSet &beams) {
    if (i < 0 || i >= static_cast<int>(ch.tbs_to_near.size()))
        throw std::out_of_range("sinr_near: user index");
    const Eigen::VectorXcd &h = ch.tbs_to_near[i];
    double interference = ch.noise_var_near.at(i);
    for (std::size_t j = 0; j < beams.tbs_beams.size(); ++j) {
        if (static_cast<int>(j) == i)
            continue;
        interference += beam_power(h, beams.tbs_beams[j]);
    }
    if (!beams.sat_beams.empty()) {
        const Eigen::VectorXcd &hs = ch.sat_to_near.at(i);
        for (const auto &v : beams.sat_beams)
            interference += beam_power(hs, v);
    }
    return beam_power(h, beams.tbs_beams.at(i)) / interference;
}

double sinr_off(int m, const ChannelSet &ch, const BeamSet &beams) {
    if (m < 0 || m >= static_cast<int>(ch.sat_to_off.size()))
        throw std::out_of_range("sinr_off: user index");
    const Eigen::VectorXcd &h = ch.sat_to_off[m];
    double interference = ch.noise_var_off.at(m);
    for (std::size_t k = 0; k < beams.sat_beams.size(); ++k) {
        if (static_cast<int>(k) == m)
            continue;
        interference += beam_power(h, beams.sat_beams[k]);
    }
    return beam_power(h, beams.sat_beams.at(m)) / interference;
}

double rate(double sinr) {
    if (sinr < 0.0)
        throw std::domain_error("rate: SINR must be >= 0");
    return std::log2(1.0 + sinr);
}

} // namespace seabeam
