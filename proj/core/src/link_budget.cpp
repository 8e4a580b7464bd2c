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

#include "seabeam/link_budget.hpp"

#include <cmath>
#include <stdexcept>

namespace seabeam {

double max_los_distance(double tbs_height_m, double user_height_m, double earth_radius_m) {
    if (tbs_height_m < 0.0 || user_height_m < 0.0 || earth_radius_m <= 0.0)
        throw std::domain_error("max_los_distance: heights must be >= 0 and earth radius > 0");
    const double a = std::sqrt(tbs_height_m * tbs_height_m + 2.0 * tbs_height_m * earth_radius_m);
    const double b = std::sqrt(user_height_m * user_height_m + 2.0 * user_height_m * earth_radius_m);
    return a + b;
}

double free_space_loss(double wavelength_m, double distance_m, int distance_exponent) {
    if (wavelength_m <= 0.0 || distance_m <= 0.0)
        throw std::domain_error("free_space_loss: wavelength and distance must be > 0");
    if (distance_exponent != 1 && distance_exponent != 2)
        throw std::domain_error("free_space_loss: distance exponent must be 1 or 2");
    const double four_pi = 4.0 * pi;
    return wavelength_m * wavelength_m /
           (four_pi * four_pi * std::pow(distance_m, distance_exponent));
}

namespace {

// Ascending power series, adequate to about 5e-12 relative error up to
// x = 12 where the largest term is ~3.6e3 against results of order 0.1.
double bessel_series(int nu, double x) {
    const double half = 0.5 * x;
    double term = 1.0;
    for (int j = 1; j <= nu; ++j)
        term *= half / static_cast<double>(j);
    double sum = term;
    const double q = half * half;
    for (int k = 1; k < 80; ++k) {
        term *= -q / (static_cast<double>(k) * static_cast<double>(k + nu));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300)
            break;
    }
    return sum;
}

// Normalized downward recurrence. Stable for all orders and free of the
// cancellation that limits the power series at larger arguments.
void bessel_miller(double x, double &j1, double &j3) {
    const int start = 2 * (static_cast<int>(x) / 2) + 42;
    double jp = 0.0;
    double jc = 1e-30;
    double norm = 0.0;
    double out1 = 0.0;
    double out3 = 0.0;
    for (int n = start; n > 0; --n) {
        const double jm = (2.0 * n / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (n - 1 == 1)
            out1 = jc;
        if (n - 1 == 3)
            out3 = jc;
        if ((n - 1) % 2 == 0)
            norm += (n - 1 == 0 ? 1.0 : 2.0) * jc;
        if (std::abs(jc) > 1e250) {
            jp *= 1e-250;
            jc *= 1e-250;
            norm *= 1e-250;
            out1 *= 1e-250;
            out3 *= 1e-250;
        }
    }
    j1 = out1 / norm;
    j3 = out3 / norm;
}

} // namespace

double bessel_j1(double x) {
    if (x < 0.0)
        return -bessel_j1(-x);
    if (x <= 12.0)
        return bessel_series(1, x);
    double j1 = 0.0, j3 = 0.0;
    bessel_miller(x, j1, j3);
    return j1;
}

double bessel_j3(double x) {
    if (x < 0.0)
        return -bessel_j3(-x);
    if (x <= 12.0)
        return bessel_series(3, x);
    double j1 = 0.0, j3 = 0.0;
    bessel_miller(x, j1, j3);
    return j3;
}

double satellite_beam_gain(double g_max, double boresight_angle_rad, double three_db_angle_rad) {
    if (g_max <= 0.0)
        throw std::domain_error("satellite_beam_gain: g_max must be > 0");
    if (boresight_angle_rad < 0.0 || boresight_angle_rad >= 0.5 * pi)
        throw std::domain_error("satellite_beam_gain: boresight angle must lie in [0, pi/2)");
    if (three_db_angle_rad <= 0.0 || three_db_angle_rad >= 0.5 * pi)
        throw std::domain_error("satellite_beam_gain: 3dB angle must lie in (0, pi/2)");
    const double psi = 2.07123 * std::sin(boresight_angle_rad) / std::sin(three_db_angle_rad);
    if (psi < 1e-6) {
        const double shape = 1.0 - 5.0 * psi * psi / 64.0;
        return g_max * shape * shape;
    }
    const double shape = bessel_j1(psi) / (2.0 * psi) + 36.0 * bessel_j3(psi) / (psi * psi * psi);
    return g_max * shape * shape;
}

double sample_rain_attenuation(const RainModel &model, RandomStream &rng) {
    if (model.log_variance_db < 0.0)
        throw std::domain_error("sample_rain_attenuation: variance must be >= 0");
    const double x = model.log_mean_db + std::sqrt(model.log_variance_db) * rng.normal();
    const double r_db = std::exp(x);
    return std::pow(10.0, -r_db / 20.0);
}

} // namespace seabeam
