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

#include "densecode/experiment.hpp"

#include <algorithm>

namespace densecode {

ExperimentPanel run_experiment(const nmr::SpinSystem& sys, const std::optional<noise::ErrorParams>& noise, Message m,
                               BellVariant v) {
    ExperimentPanel panel;
    panel.message = m;
    panel.expected = DenseCodingCircuit().run(m, v);
    panel.theory = DensityMatrix::from_pure(PureState::basis(panel.expected.basis()));

    nmr::PulseSequence program = nmr::protocol_program(sys, m, v);
    DensityMatrix rho0;
    if (noise) {
        panel.simulated = noise::ensemble_average(program, sys, *noise, rho0);
    } else {
        panel.simulated = evolve(nmr::compile(program, sys), rho0);
    }

    auto records = tomo::simulate_readouts(panel.simulated);
    panel.reconstructed = tomo::reconstruct(records);
    panel.theory_table = tomo::element_modulus_table(panel.theory);
    panel.experiment_table = tomo::element_modulus_table(panel.reconstructed);
    panel.error = tomo::max_element_error(panel.experiment_table, panel.theory_table);
    return panel;
}

std::array<ExperimentPanel, 4> run_all_panels(const nmr::SpinSystem& sys,
                                              const std::optional<noise::ErrorParams>& noise, BellVariant v) {
    return {run_experiment(sys, noise, Message(1), v), run_experiment(sys, noise, Message(2), v),
            run_experiment(sys, noise, Message(3), v), run_experiment(sys, noise, Message(4), v)};
}

double max_relative_error(const std::array<ExperimentPanel, 4>& panels) {
    double e = 0.0;
    for (const auto& p : panels) e = std::max(e, p.error.relative);
    return e;
}

}  // namespace densecode
