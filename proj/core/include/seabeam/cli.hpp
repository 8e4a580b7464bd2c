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

#ifndef SEABEAM_CLI_HPP
#define SEABEAM_CLI_HPP

namespace seabeam {

// Experiment command-line driver. Exit codes: 0 on success, 1 on usage or
// configuration errors, 2 when the scenario is infeasible or the solve
// fails. Exposed as a function so tests can drive it in-process.
int run_cli(int argc, const char *const *argv);

} // namespace seabeam

#endif // SEABEAM_CLI_HPP
