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

#include <cstdint>
#include <random>

#include "densecode/qcore.hpp"

namespace densecode {

/// Seeded source of uniform and Gaussian draws. std::normal_distribution is
/// implementation-defined, so Gaussians come from Box-Muller over the raw
/// engine output and are identical across standard libraries.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on the open interval (0, 1).
    double uniform();
    double gaussian();
    /// sigma * z with z standard normal, redrawn until |z| <= 3.
    double truncated_gaussian(double sigma);
    Complex complex_gaussian();

   private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Haar-random state.
PureState random_pure_state(Rng& rng);
/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Unitary4 random_unitary(Rng& rng);
/// G G^dag / tr with G a Ginibre matrix of the given rank (1..4).
DensityMatrix random_density_matrix(Rng& rng, int rank = 4);

}  // namespace densecode
