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

#include "seabeam/csi.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace seabeam {

Eigen::VectorXcd steering_derivative(const SteeringVector &abar) {
    const int m = static_cast<int>(abar.elements.size());
    Eigen::VectorXcd d(m);
    const double coeff = 2.0 * pi * abar.spacing_over_wavelength *
                         std::sin(abar.departure_angle_rad);
    const std::complex<double> j_unit(0.0, 1.0);
    for (int k = 0; k < m; ++k)
        d[k] = j_unit * coeff * static_cast<double>(k) * abar.elements[k];
    return d;
}

ErrorBound channel_error_bound(const SteeringVector &abar, double epsilon_rad, LinkKind /*kind*/,
                               double scale) {
    if (epsilon_rad < 0.0)
        throw std::domain_error("channel_error_bound: epsilon must be >= 0");
    ErrorBound out;
    out.sensitivity = scale * steering_derivative(abar);
    out.xi = out.sensitivity.norm();
    out.rho = out.xi * epsilon_rad;
    return out;
}

double sample_angle_error(double epsilon_rad, AngleErrorMode mode, RandomStream &rng) {
    if (epsilon_rad < 0.0)
        throw std::domain_error("sample_angle_error: epsilon must be >= 0");
    if (mode == AngleErrorMode::uniform)
        return rng.uniform(-epsilon_rad, epsilon_rad);
    return (rng.next_u64() & 1u) ? epsilon_rad : -epsilon_rad;
}

Eigen::VectorXcd perturbed_channel(const Eigen::VectorXcd &nominal,
                                   const Eigen::VectorXcd &sensitivity, double dtheta) {
    if (nominal.size() != sensitivity.size())
        throw std::invalid_argument("perturbed_channel: dimension mismatch");
    return nominal + sensitivity * dtheta;
}

Eigen::VectorXcd channel_at(const LinkModel &link, double dtheta, PerturbationModel model) {
    if (model == PerturbationModel::first_order)
        return perturbed_channel(link.nominal, link.sensitivity, dtheta);
    const SteeringVector a = steering(link.theta_rad + dtheta,
                                      static_cast<int>(link.nominal.size()), link.spacing_m,
                                      link.wavelength_m);
    return link.amplitude * a.elements + link.nlos;
}

LinkModel make_link_model(double amplitude, const Eigen::VectorXcd &nlos, double theta_rad,
                          double spacing_m, double wavelength_m, int antennas) {
    LinkModel link;
    link.amplitude = amplitude;
    link.nlos = nlos.size() > 0 ? nlos : Eigen::VectorXcd::Zero(antennas).eval();
    if (link.nlos.size() != antennas)
        throw std::invalid_argument("make_link_model: NLoS dimension mismatch");
    link.theta_rad = theta_rad;
    link.spacing_m = spacing_m;
    link.wavelength_m = wavelength_m;
    const SteeringVector a = steering(theta_rad, antennas, spacing_m, wavelength_m);
    link.nominal = amplitude * a.elements + link.nlos;
    link.sensitivity = amplitude * steering_derivative(a);
    return link;
}

} // namespace seabeam
