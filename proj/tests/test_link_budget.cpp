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

#include <doctest.h>

#include <cmath>

#include "oracle_values.hpp"
#include "seabeam/link_budget.hpp"
#include "seabeam/units.hpp"

using namespace seabeam;

TEST_CASE("bessel functions match the reference table to 1e-10") {
    for (std::size_t i = 0; i < oracle::bessel_count; ++i) {
        const double x = oracle::bessel_x[i];
        CHECK(std::abs(bessel_j1(x) - oracle::bessel_j1[i]) < 1e-10);
        CHECK(std::abs(bessel_j3(x) - oracle::bessel_j3[i]) < 1e-10);
    }
    CHECK(bessel_j1(1.0) == doctest::Approx(oracle::j1_at_1).epsilon(1e-14));
    CHECK(bessel_j3(2.0) == doctest::Approx(oracle::j3_at_2).epsilon(1e-14));
}

TEST_CASE("bessel small-argument limits") {
    // J1(x) ~ x/2 and J3(x) ~ x^3/48 for small x.
    CHECK(bessel_j1(1e-8) == doctest::Approx(0.5e-8).epsilon(1e-10));
    CHECK(bessel_j3(1e-4) == doctest::Approx(1e-12 / 48.0).epsilon(1e-7));
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(bessel_j3(0.0) == 0.0);
}

TEST_CASE("horizon distance matches the spherical-earth closed form") {
    CHECK(max_los_distance(50.0, 0.0, default_earth_radius_m) ==
          doctest::Approx(oracle::los_50_0).epsilon(1e-12));
    CHECK(max_los_distance(50.0, 10.0, default_earth_radius_m) ==
          doctest::Approx(oracle::los_50_10).epsilon(1e-12));
    // Symmetric in the two heights.
    CHECK(max_los_distance(10.0, 50.0, default_earth_radius_m) ==
          doctest::Approx(oracle::los_50_10).epsilon(1e-12));
}

TEST_CASE("free-space loss closed forms") {
    const double lam = speed_of_light_mps / 1.6e8;
    CHECK(free_space_loss(lam, 5.5e5) == doctest::Approx(oracle::fsl_550km_e1).epsilon(1e-12));
    CHECK(free_space_loss(lam, 5.5e5, 2) == doctest::Approx(oracle::fsl_550km_e2).epsilon(1e-12));
    CHECK(free_space_loss(lam, 1.0e3) == doctest::Approx(oracle::fsl_1km_e1).epsilon(1e-12));
    // Doubling the distance halves the exponent-1 loss factor.
    CHECK(free_space_loss(lam, 2.0e3) ==
          doctest::Approx(0.5 * oracle::fsl_1km_e1).epsilon(1e-12));
}

TEST_CASE("satellite beam gain hits boresight maximum and the 3 dB point") {
    const double g_max = db_to_linear(55.0);
    const double phi3 = deg_to_rad(0.4);
    CHECK(satellite_beam_gain(g_max, 0.0, phi3) == doctest::Approx(g_max).epsilon(1e-12));
    // At the 3 dB angle the pattern factor is one half within 2 percent.
    const double at3 = satellite_beam_gain(g_max, phi3, phi3);
    CHECK(at3 == doctest::Approx(0.5 * g_max).epsilon(0.02));
    CHECK(at3 / g_max == doctest::Approx(oracle::beam_factor_3db).epsilon(1e-10));
    // Never exceeds the maximum and decreases over the main lobe.
    double prev = g_max;
    for (int i = 1; i <= 10; ++i) {
        const double g = satellite_beam_gain(g_max, i * phi3 / 10.0, phi3);
        CHECK(g <= g_max * (1.0 + 1e-12));
        CHECK(g <= prev * (1.0 + 1e-12));
        prev = g;
    }
}

TEST_CASE("beam pattern factor matches the reference at interior angles") {
    // Invert psi = 2.07123 sin(phi)/sin(phi_3db) to pick phi giving psi = 1, 5.
    const double phi3 = deg_to_rad(0.4);
    auto phi_for_psi = [&](double psi) {
        return std::asin(psi * std::sin(phi3) / 2.07123);
    };
    CHECK(satellite_beam_gain(1.0, phi_for_psi(1.0), phi3) ==
          doctest::Approx(oracle::beam_factor_1).epsilon(1e-10));
    CHECK(satellite_beam_gain(1.0, phi_for_psi(5.0), phi3) ==
          doctest::Approx(oracle::beam_factor_5).epsilon(1e-10));
}

TEST_CASE("rain attenuation is a bounded amplitude factor") {
    RainModel model;
    RandomStream rng(99);
    for (int i = 0; i < 2000; ++i) {
        const double f = sample_rain_attenuation(model, rng);
        CHECK(f > 0.0);
        CHECK(f <= 1.0);
    }
    // A zero-variance model is deterministic: r_dB = exp(mu).
    RainModel fixed;
    fixed.log_mean_db = 0.0;
    fixed.log_variance_db = 0.0;
    RandomStream rng2(1);
    CHECK(sample_rain_attenuation(fixed, rng2) ==
          doctest::Approx(oracle::rain_amp_x0).epsilon(1e-12));
}
