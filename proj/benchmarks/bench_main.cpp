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

#include "seabeam/beamformer.hpp"
#include "seabeam/channel.hpp"
#include "seabeam/link_budget.hpp"
#include "seabeam/rng.hpp"
#include "seabeam/scenario.hpp"
#include "seabeam/solver.hpp"

#include <benchmark/benchmark.h>

#include <cstdlib>

namespace {

using namespace seabeam;

void bm_steering(benchmark::State &state) {
    const int antennas = static_cast<int>(state.range(0));
    double theta = 0.7;
    for (auto _ : state) {
        auto v = steering(theta, antennas, 0.9367, 1.8734);
        benchmark::DoNotOptimize(v.elements);
        theta += 1e-6;
    }
}
BENCHMARK(bm_steering)->Arg(8)->Arg(32)->Arg(128);

void bm_bessel_j1(benchmark::State &state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_j1(x));
        x += 1e-4;
        if (x > 20.0) x = 0.1;
    }
}
BENCHMARK(bm_bessel_j1);

SystemConfig small_system() {
    SystemConfig sys;
    sys.antennas_tbs = 4;
    sys.antennas_sat = 4;
    sys.users_near = 2;
    sys.users_off = 2;
    sys.rate_near_bps_hz = 0.1;
    sys.rate_off_bps_hz = 0.1;
    return sys;
}

void bm_scenario(benchmark::State &state) {
    SystemConfig sys = small_system();
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RandomStream rng(derive_seed(7, 0, trial++));
        Scenario sc = make_scenario(sys, rng);
        benchmark::DoNotOptimize(sc.channels.tbs_to_near.size());
    }
}
BENCHMARK(bm_scenario);

void bm_realify(benchmark::State &state) {
    RandomStream rng(11);
    SystemConfig sys = small_system();
    Scenario sc = make_scenario(sys, rng);
    for (auto _ : state) {
        // Program assembly plus realification, without the solve.
        ConicProgram prog;
        int w0 = prog.add_matrix_variable("W0", 4);
        int w1 = prog.add_matrix_variable("W1", 4);
        prog.add_objective_trace(w0, Eigen::MatrixXcd::Identity(4, 4));
        prog.add_objective_trace(w1, Eigen::MatrixXcd::Identity(4, 4));
        LmiBlock blk;
        blk.name = "qos";
        blk.dim = 5;
        blk.constant = Eigen::MatrixXcd::Zero(5, 5);
        Eigen::MatrixXcd map(5, 4);
        map.setZero();
        map.topLeftCorner(4, 4).setIdentity();
        map.row(4) = sc.channels.tbs_to_near[0].adjoint();
        blk.congruences.push_back({w0, 1.0, map});
        blk.congruences.push_back({w1, -1.0, map});
        prog.add_lmi(blk);
        StandardForm form = prog.realify();
        benchmark::DoNotOptimize(form.a_vals.size());
    }
}
BENCHMARK(bm_realify);

void bm_small_solve(benchmark::State &state) {
    SystemConfig sys = small_system();
    PenaltyConfig cfg;
    ClarabelSolver solver;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RandomStream rng(derive_seed(3, 1, trial++));
        Scenario sc = make_scenario(sys, rng);
        SdrResult sdr = sdr_initialize(sc.channels, sc.qos, sc.uncertainty, solver, cfg);
        benchmark::DoNotOptimize(sdr.objective_w);
    }
}
BENCHMARK(bm_small_solve)->Unit(benchmark::kMillisecond);

} // namespace

int main(int argc, char **argv) {
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
