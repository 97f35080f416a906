// Copyright 2026 The densecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <optional>

#include "densecode/noise.hpp"
#include "densecode/protocol.hpp"
#include "densecode/tomo.hpp"

namespace densecode {

/// One simulated run of the pulse program followed by tomography.
struct ExperimentPanel {
    Message message{1};
    DecodedOutput expected;     // ideal-layer readout
    DensityMatrix theory;       // |yx><yx|
    DensityMatrix simulated;    // ensemble output before tomography
    DensityMatrix reconstructed;
    tomo::ModulusTable theory_table;
    tomo::ModulusTable experiment_table;
    tomo::ElementError error;
};

/// Runs the pulse program for (m, v) on the effective pure state |00><00|,
/// averaged over the noise ensemble when `noise` is set, then reconstructs
/// the output from simulated readouts.
ExperimentPanel run_experiment(const nmr::SpinSystem& sys, const std::optional<noise::ErrorParams>& noise, Message m,
                               BellVariant v);

/// Panels for U_a1..U_a4 with starting state v.
std::array<ExperimentPanel, 4> run_all_panels(const nmr::SpinSystem& sys,
                                              const std::optional<noise::ErrorParams>& noise,
                                              BellVariant v = BellVariant::MinusPhi);

/// Largest relative element error across the panels.
double max_relative_error(const std::array<ExperimentPanel, 4>& panels);

}  // namespace densecode
