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

#ifndef SEABEAM_SOLVER_HPP
#define SEABEAM_SOLVER_HPP

#include "seabeam/conic.hpp"

namespace seabeam {

// Interior-point backend built on the Clarabel solver. Thread-compatible:
// distinct instances may be used from distinct threads.
class ClarabelSolver final : public ConicSolver {
  public:
    RawSolution solve(const StandardForm &form, double tolerance, int max_iterations,
                      bool verbose) override;
};

} // namespace seabeam

#endif // SEABEAM_SOLVER_HPP
