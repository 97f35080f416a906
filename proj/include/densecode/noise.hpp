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

// Phenomenological ensemble error model. Each ensemble member (a sample
// region of the bulk liquid) sees its own RF amplitude scale per channel and
// its own resonance offset per spin; the observed state is the member
// average followed by transverse decay.

#include <cstdint>
#include <limits>

#include "densecode/nmrsim.hpp"
#include "densecode/qcore.hpp"

namespace densecode::noise {

struct ErrorParams {
    double rf_spread = 0.0;         // std-dev of fractional RF amplitude error
    double calib_offset = 0.0;      // systematic fractional angle error
    double offset_spread_hz = 0.0;  // std-dev of resonance offset
    double t2_a_s = std::numeric_limits<double>::infinity();
    double t2_b_s = std::numeric_limits<double>::infinity();
    int ensemble_size = 1;
    std::uint64_t seed = 1;

    /// Throws InvalidInput for negative spreads, non-positive T2 or
    /// ensemble_size < 1.
    void validate() const;
    bool is_noiseless() const;
};

/// Parameter set shipped for the error-scale demonstration. Chosen by the
/// grid search in tools/calibrate_noise.cpp; see README.
ErrorParams demo_error_params();

/// Per-member perturbation draw.
struct MemberSample {
    double rf_scale_a = 1.0;  // multiplies every X/Y angle on spin a
    double rf_scale_b = 1.0;
    double offset_a_hz = 0.0;
    double offset_b_hz = 0.0;
};

/// Gaussian draws truncated at +-3 sigma, reproducible from the seed alone.
MemberSample draw_member(const ErrorParams& p, std::uint64_t sample_seed);

/// Seed of member `index` in an ensemble rooted at `root_seed`.
std::uint64_t member_seed(std::uint64_t root_seed, std::uint64_t index);

/// Compile with a specific member's perturbations. Z rotations are frame
/// changes and stay exact.
Unitary4 compile_member(const nmr::PulseSequence& seq, const nmr::SpinSystem& sys, const MemberSample& m);

/// compile_member with the draw for `sample_seed`.
Unitary4 noisy_compile(const nmr::PulseSequence& seq, const nmr::SpinSystem& sys, const ErrorParams& p,
                       std::uint64_t sample_seed);

/// Multiply coherence |j><k| by exp(-t/T2) for each spin flipped between j
/// and k.
Matrix4 apply_t2_decay(const Matrix4& rho, double t, double t2_a_s, double t2_b_s);

/// Mean of U_k rho0 U_k^dag over the ensemble members, then T2 decay over the
/// sequence's total delay. Bit-identical for a fixed seed whatever `threads`
/// is (0 = hardware concurrency).
DensityMatrix ensemble_average(const nmr::PulseSequence& seq, const nmr::SpinSystem& sys, const ErrorParams& p,
                               const DensityMatrix& rho0, unsigned threads = 0);

}  // namespace densecode::noise
