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

#include "densecode/random.hpp"

#include <cmath>
#include <numbers>

namespace densecode {

double Rng::uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

double Rng::gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::truncated_gaussian(double sigma) {
    if (sigma == 0.0) return 0.0;
    double z;
    do {
        z = gaussian();
    } while (std::abs(z) > 3.0);
    return sigma * z;
}

Complex Rng::complex_gaussian() {
    double re = gaussian();
    double im = gaussian();
    return {re, im};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

PureState random_pure_state(Rng& rng) {
    Vector4 v;
    for (int k = 0; k < 4; ++k) v(k) = rng.complex_gaussian();
    return PureState(Vector4(v / v.norm()));
}

Unitary4 random_unitary(Rng& rng) {
    Matrix4 g;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g(r, c) = rng.complex_gaussian();
    Eigen::HouseholderQR<Matrix4> qr(g);
    Matrix4 q = qr.householderQ();
    Matrix4 r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < 4; ++k) {
        Complex d = r(k, k);
        if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
    }
    return Unitary4(q);
}

DensityMatrix random_density_matrix(Rng& rng, int rank) {
    if (rank < 1 || rank > 4) throw InvalidInput("rank must be in 1..4");
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> g(4, rank);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < rank; ++c) g(r, c) = rng.complex_gaussian();
    Matrix4 rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(rho);
}

}  // namespace densecode
