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

#ifndef SEABEAM_CSI_HPP
#define SEABEAM_CSI_HPP

#include <Eigen/Dense>
#include <vector>

#include "seabeam/channel.hpp"
#include "seabeam/rng.hpp"

namespace seabeam {

// Wave-fluctuation uncertainty description. Angle errors are bounded by
// epsilon per transmitter; the channel-space radii rho = xi * epsilon differ
// per user because the sensitivity norm xi depends on each nominal channel.
struct UncertaintyModel {
    double angle_bound_tbs = 0.0; // epsilon_1, rad
    double angle_bound_sat = 0.0; // epsilon_2, rad
    double tidal_factor_tbs = 0.0;
    double tidal_factor_sat = 0.0;
    std::vector<double> sensitivity_norm_tbs; // xi_1 per near-shore user
    std::vector<double> sensitivity_norm_sat; // xi_2 per off-shore user
    std::vector<double> channel_radius_tbs;   // rho_1 = xi_1 * epsilon_1
    std::vector<double> channel_radius_sat;   // rho_2 = xi_2 * epsilon_2
};

// Everything needed to rebuild one link's channel at a shifted departure
// angle: nominal = amplitude * a(theta) + nlos, with nlos fixed.
struct LinkModel {
    double amplitude = 0.0; // real scale on the steering part
    Eigen::VectorXcd nlos;  // zero for terrestrial links
    double theta_rad = 0.0;
    double spacing_m = 0.0;
    double wavelength_m = 0.0;
    Eigen::VectorXcd nominal;
    Eigen::VectorXcd sensitivity; // d nominal / d theta at theta_rad
};

enum class LinkKind { terrestrial, satellite };
enum class AngleErrorMode { uniform, boundary };
enum class PerturbationModel { first_order, exact };

// Derivative of the array response with respect to the departure angle.
// Element k is j (2 pi b k / lambda) sin(theta) a_k; element 0 is exactly 0.
Eigen::VectorXcd steering_derivative(const SteeringVector &abar);

struct ErrorBound {
    double xi = 0.0;  // norm of the per-radian channel sensitivity
    double rho = 0.0; // xi * epsilon
    Eigen::VectorXcd sensitivity;
};

// Channel-space error bound for one link. The scale argument is the real
// coefficient multiplying the steering part of the channel: the two-ray
// amplitude for terrestrial links, g sqrt(P K/(1+K)) for satellite links.
ErrorBound channel_error_bound(const SteeringVector &abar, double epsilon_rad, LinkKind kind,
                               double scale);

double sample_angle_error(double epsilon_rad, AngleErrorMode mode, RandomStream &rng);

// First-order perturbation: nominal + sensitivity * dtheta.
Eigen::VectorXcd perturbed_channel(const Eigen::VectorXcd &nominal,
                                   const Eigen::VectorXcd &sensitivity, double dtheta);

// Channel of a link at departure angle theta + dtheta, either via the
// first-order model or via exact rebuild with the stored NLoS part.
Eigen::VectorXcd channel_at(const LinkModel &link, double dtheta, PerturbationModel model);

// Assembles the rebuild model for a link given its pieces.
LinkModel make_link_model(double amplitude, const Eigen::VectorXcd &nlos, double theta_rad,
                          double spacing_m, double wavelength_m, int antennas);

} // namespace seabeam

#endif
