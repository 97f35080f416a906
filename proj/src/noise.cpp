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

#include "densecode/noise.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <variant>
#include <vector>

#include "densecode/random.hpp"

namespace densecode::noise {

namespace {

bool non_negative_finite(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void ErrorParams::validate() const {
    if (!non_negative_finite(rf_spread)) throw InvalidInput("rf_spread must be finite and >= 0");
    if (!std::isfinite(calib_offset)) throw InvalidInput("calib_offset must be finite");
    if (!non_negative_finite(offset_spread_hz)) throw InvalidInput("offset_spread_hz must be finite and >= 0");
    if (!(t2_a_s > 0.0) || !(t2_b_s > 0.0)) throw InvalidInput("T2 values must be positive");
    if (ensemble_size < 1) throw InvalidInput("ensemble_size must be >= 1");
}

bool ErrorParams::is_noiseless() const {
    return rf_spread == 0.0 && calib_offset == 0.0 && offset_spread_hz == 0.0 && std::isinf(t2_a_s) &&
           std::isinf(t2_b_s);
}

ErrorParams demo_error_params() {
    ErrorParams p;
    p.rf_spread = 0.08;
    p.calib_offset = 0.01;
    p.offset_spread_hz = 5.0;
    p.t2_a_s = 3.0;
    p.t2_b_s = 0.3;
    p.ensemble_size = 1000;
    p.seed = 20260101;
    return p;
}

std::uint64_t member_seed(std::uint64_t root_seed, std::uint64_t index) {
    return splitmix64(splitmix64(root_seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

MemberSample draw_member(const ErrorParams& p, std::uint64_t sample_seed) {
    Rng g(sample_seed);
    MemberSample m;
    m.rf_scale_a = 1.0 + p.calib_offset + g.truncated_gaussian(p.rf_spread);
    m.rf_scale_b = 1.0 + p.calib_offset + g.truncated_gaussian(p.rf_spread);
    m.offset_a_hz = g.truncated_gaussian(p.offset_spread_hz);
    m.offset_b_hz = g.truncated_gaussian(p.offset_spread_hz);
    return m;
}

Unitary4 compile_member(const nmr::PulseSequence& seq, const nmr::SpinSystem& sys, const MemberSample& m) {
    Matrix4 u = Matrix4::Identity();
    for (const auto& e : seq.events()) {
        Unitary4 step;
        if (const auto* rf = std::get_if<nmr::Rf>(&e)) {
            double scale = 1.0;
            if (rf->axis != nmr::Axis::Z) scale = rf->spin == Spin::A ? m.rf_scale_a : m.rf_scale_b;
            step = nmr::rf_unitary(rf->spin, rf->axis, rf->phase_sign * rf->angle * scale);
        } else {
            step = nmr::free_evolution(sys, std::get<nmr::Delay>(e).duration, m.offset_a_hz, m.offset_b_hz);
        }
        u = (step.matrix() * u).eval();
    }
    return Unitary4(u);
}

Unitary4 noisy_compile(const nmr::PulseSequence& seq, const nmr::SpinSystem& sys, const ErrorParams& p,
                       std::uint64_t sample_seed) {
    p.validate();
    return compile_member(seq, sys, draw_member(p, sample_seed));
}

Matrix4 apply_t2_decay(const Matrix4& rho, double t, double t2_a_s, double t2_b_s) {
    const double da = std::isinf(t2_a_s) ? 1.0 : std::exp(-t / t2_a_s);
    const double db = std::isinf(t2_b_s) ? 1.0 : std::exp(-t / t2_b_s);
    Matrix4 out = rho;
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            int flips = j ^ k;
            double f = 1.0;
            if (flips & 1) f *= da;
            if (flips & 2) f *= db;
            out(j, k) *= f;
        }
    }
    return out;
}

DensityMatrix ensemble_average(const nmr::PulseSequence& seq, const nmr::SpinSystem& sys, const ErrorParams& p,
                               const DensityMatrix& rho0, unsigned threads) {
    p.validate();
    const std::size_t n = static_cast<std::size_t>(p.ensemble_size);
    std::vector<Matrix4> members(n);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            Unitary4 u = compile_member(seq, sys, draw_member(p, member_seed(p.seed, k)));
            members[k] = u.matrix() * rho0.matrix() * u.matrix().adjoint();
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        work(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (std::size_t begin = 0; begin < n; begin += chunk) pool.emplace_back(work, begin, std::min(n, begin + chunk));
    }

    // Fixed summation order keeps the result independent of the thread split.
    Matrix4 sum = Matrix4::Zero();
    for (const Matrix4& m : members) sum += m;
    Matrix4 rho = sum / static_cast<double>(n);
    rho = apply_t2_decay(rho, seq.total_delay(), p.t2_a_s, p.t2_b_s);
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(rho);
}

}  // namespace densecode::noise
