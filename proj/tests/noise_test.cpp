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
#include <chrono>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "densecode/error.hpp"
#include "densecode/experiment.hpp"
#include "densecode/random.hpp"

namespace densecode::noise {
namespace {

using std::numbers::pi;
const nmr::SpinSystem kSys;

double diff(const Matrix4& a, const Matrix4& b) { return max_abs(Matrix4(a - b)); }

TEST(ErrorParams, Validation) {
    ErrorParams p;
    EXPECT_TRUE(p.is_noiseless());
    EXPECT_NO_THROW(p.validate());
    p.rf_spread = -0.1;
    EXPECT_THROW(p.validate(), InvalidInput);
    p = ErrorParams{};
    p.ensemble_size = 0;
    EXPECT_THROW(p.validate(), InvalidInput);
    p = ErrorParams{};
    p.t2_b_s = 0.0;
    EXPECT_THROW(p.validate(), InvalidInput);
    EXPECT_FALSE(demo_error_params().is_noiseless());
}

TEST(NoisyCompile, ZeroNoiseEqualsCompile) {
    auto prog = nmr::protocol_program(kSys, Message(3), BellVariant::PlusPsi);
    for (std::uint64_t s : {1u, 2u, 99u})
        EXPECT_EQ(noisy_compile(prog, kSys, ErrorParams{}, s).matrix(), nmr::compile(prog, kSys).matrix());
}

TEST(NoisyCompile, CalibrationOffsetScalesAngle) {
    ErrorParams p;
    p.calib_offset = 0.03;
    nmr::PulseSequence s{nmr::Rf{Spin::B, nmr::Axis::X, pi}};
    Matrix4 expect = nmr::rf_unitary(Spin::B, nmr::Axis::X, pi * 1.03).matrix();
    EXPECT_LT(diff(noisy_compile(s, kSys, p, 5).matrix(), expect), 1e-15);
}

TEST(NoisyCompile, ZRotationsStayExact) {
    ErrorParams p;
    p.calib_offset = 0.1;
    p.rf_spread = 0.2;
    nmr::PulseSequence s{nmr::Rf{Spin::A, nmr::Axis::Z, pi / 3}};
    EXPECT_EQ(noisy_compile(s, kSys, p, 5).matrix(), nmr::compile(s, kSys).matrix());
}

TEST(DrawMember, TruncatedAtThreeSigma) {
    ErrorParams p;
    p.rf_spread = 0.1;
    p.calib_offset = 0.02;
    p.offset_spread_hz = 10.0;
    double lo = 1e9, hi = -1e9;
    for (std::uint64_t i = 0; i < 20000; ++i) {
        MemberSample m = draw_member(p, member_seed(7, i));
        for (double d : {m.rf_scale_a - 1.02, m.rf_scale_b - 1.02}) {
            EXPECT_LE(std::abs(d), 3 * 0.1 + 1e-15);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        EXPECT_LE(std::abs(m.offset_a_hz), 30.0 + 1e-12);
        EXPECT_LE(std::abs(m.offset_b_hz), 30.0 + 1e-12);
    }
    EXPECT_LT(lo, -0.25);
    EXPECT_GT(hi, 0.25);
}

TEST(DrawMember, ReproducibleAndDistinctSeeds) {
    ErrorParams p = demo_error_params();
    MemberSample a = draw_member(p, 42), b = draw_member(p, 42);
    EXPECT_EQ(a.rf_scale_a, b.rf_scale_a);
    EXPECT_EQ(a.offset_b_hz, b.offset_b_hz);
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 10000; ++i) seeds.insert(member_seed(1, i));
    EXPECT_EQ(seeds.size(), 10000u);
    EXPECT_NE(member_seed(1, 0), member_seed(2, 0));
}

TEST(T2Decay, CoherenceOrderFactors) {
    Matrix4 rho = Matrix4::Constant(Complex(1.0));
    double t = 0.1, ta = 2.0, tb = 0.5;
    Matrix4 out = apply_t2_decay(rho, t, ta, tb);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            double f = 1.0;
            if ((j & 1) != (k & 1)) f *= std::exp(-t / ta);
            if ((j >> 1) != (k >> 1)) f *= std::exp(-t / tb);
            EXPECT_NEAR(out(j, k).real(), f, 1e-15) << j << k;
        }
    }
    Matrix4 none = apply_t2_decay(rho, t, std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity());
    EXPECT_EQ(none, rho);
}

TEST(EnsembleAverage, ZeroNoiseIsUnitaryConjugation) {
    auto prog = nmr::protocol_program(kSys, Message(2), BellVariant::MinusPhi);
    DensityMatrix rho0 = DensityMatrix::from_pure(PureState(Vector4(0.6, 0, Complex(0, 0.8), 0)));
    Matrix4 expect = evolve(nmr::compile(prog, kSys), rho0).matrix();
    for (int n : {1, 7, 50}) {
        ErrorParams p;
        p.ensemble_size = n;
        EXPECT_LT(diff(ensemble_average(prog, kSys, p, rho0).matrix(), expect), 1e-14) << n;
    }
}

TEST(EnsembleAverage, T2OnlyMatchesPostHocDecay) {
    auto prog = nmr::bell_prep_pulses(kSys, BellVariant::MinusPhi);
    ErrorParams p;
    p.t2_a_s = 0.01;
    p.t2_b_s = 0.002;
    p.ensemble_size = 3;
    Matrix4 ideal = evolve(nmr::compile(prog, kSys), DensityMatrix()).matrix();
    Matrix4 expect = apply_t2_decay(ideal, prog.total_delay(), 0.01, 0.002);
    EXPECT_LT(diff(ensemble_average(prog, kSys, p, DensityMatrix()).matrix(), expect), 1e-14);
}

TEST(EnsembleAverage, AlwaysAValidDensityMatrix) {
    Rng rng(21);
    for (int n = 0; n < 30; ++n) {
        ErrorParams p;
        p.rf_spread = rng.uniform() * 0.5;
        p.calib_offset = (rng.uniform() - 0.5) * 0.4;
        p.offset_spread_hz = rng.uniform() * 200;
        p.t2_a_s = 1e-3 + rng.uniform();
        p.t2_b_s = 1e-4 + rng.uniform() * 0.1;
        p.ensemble_size = 1 + n * 3;
        p.seed = n;
        auto prog = nmr::protocol_program(kSys, Message(1 + n % 4), kAllVariants[n % 4]);
        DensityMatrix out = ensemble_average(prog, kSys, p, random_density_matrix(rng, 1 + n % 4));
        EXPECT_TRUE(is_density_matrix(out.matrix()));
    }
}

TEST(EnsembleAverage, BitIdenticalAcrossThreadCounts) {
    ErrorParams p = demo_error_params();
    p.ensemble_size = 257;
    auto prog = nmr::protocol_program(kSys, Message(4), BellVariant::MinusPhi);
    Matrix4 ref = ensemble_average(prog, kSys, p, DensityMatrix(), 1).matrix();
    for (unsigned t : {2u, 3u, 4u, 7u, 0u}) {
        Matrix4 m = ensemble_average(prog, kSys, p, DensityMatrix(), t).matrix();
        EXPECT_TRUE(std::equal(ref.data(), ref.data() + 16, m.data())) << t;
    }
}

TEST(EnsembleAverage, DephasingLimit) {
    nmr::PulseSequence half{nmr::Rf{Spin::A, nmr::Axis::X, pi / 2}};
    auto coherence = [&](double spread) {
        ErrorParams p;
        p.rf_spread = spread;
        p.ensemble_size = 4000;
        p.seed = 3;
        return std::abs(ensemble_average(half, kSys, p, DensityMatrix())(0, 1));
    };
    EXPECT_NEAR(coherence(0.0), 0.5, 1e-14);
    double mid = coherence(0.5), wide = coherence(50.0);
    EXPECT_LT(mid, 0.5);
    EXPECT_LT(wide, 0.05);
}

double bell_infidelity(bool refocus, std::uint64_t seed) {
    ErrorParams p;
    p.offset_spread_hz = 40.0;
    p.calib_offset = 0.03;
    p.ensemble_size = 300;
    p.seed = seed;
    auto prog = nmr::bell_prep_pulses(kSys, BellVariant::MinusPhi, refocus);
    // The pseudo-Hadamard prepares a different Bell state from the ideal
    // circuit, so compare with the noiseless pulse output.
    DensityMatrix ideal = evolve(nmr::compile(prog, kSys), DensityMatrix());
    return 1.0 - fidelity(ensemble_average(prog, kSys, p, DensityMatrix()), ideal);
}

TEST(Refocusing, ReducesBellInfidelityUnderOffsets) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        double with = bell_infidelity(true, seed), without = bell_infidelity(false, seed);
        EXPECT_LT(with, without) << seed;
    }
}

// Mean error over seeds for one rf_spread level.
std::vector<double> error_samples(double spread) {
    std::vector<double> out;
    for (std::uint64_t seed = 1; seed <= 24; ++seed) {
        ErrorParams p;
        p.rf_spread = spread;
        p.ensemble_size = 60;
        p.seed = seed * 7919;
        auto panel = run_experiment(kSys, p, Message(1), BellVariant::MinusPhi);
        out.push_back(panel.error.relative);
    }
    return out;
}

// 95% percentile bootstrap interval of mean(b) - mean(a).
std::pair<double, double> bootstrap_diff(const std::vector<double>& a, const std::vector<double>& b) {
    std::mt19937_64 eng(12345);
    std::uniform_int_distribution<std::size_t> pick_a(0, a.size() - 1), pick_b(0, b.size() - 1);
    std::vector<double> diffs;
    for (int r = 0; r < 2000; ++r) {
        double sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) sa += a[pick_a(eng)];
        for (std::size_t i = 0; i < b.size(); ++i) sb += b[pick_b(eng)];
        diffs.push_back(sb / b.size() - sa / a.size());
    }
    std::sort(diffs.begin(), diffs.end());
    return {diffs[50], diffs[1949]};
}

TEST(Property, ErrorNonDecreasingInRfSpread) {
    const std::vector<double> levels{0.0, 0.03, 0.06, 0.12, 0.24};
    std::vector<std::vector<double>> samples;
    for (double s : levels) samples.push_back(error_samples(s));
    for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
        auto [lo, hi] = bootstrap_diff(samples[k], samples[k + 1]);
        EXPECT_GT(lo, 0.0) << "rf_spread " << levels[k] << " -> " << levels[k + 1] << " interval [" << lo << ", "
                           << hi << "]";
    }
}

TEST(Demo, ErrorScaleBandAndRuntime) {
    auto start = std::chrono::steady_clock::now();
    auto panels = run_all_panels(kSys, demo_error_params());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double e = max_relative_error(panels);
    EXPECT_GE(e, 0.05);
    EXPECT_LE(e, 0.15);
    EXPECT_LT(secs, 30.0);
}

TEST(Experiment, NoiselessPanelsMatchTheory) {
    auto panels = run_all_panels(kSys, std::nullopt);
    for (const auto& p : panels) {
        EXPECT_LT(diff(p.reconstructed.matrix(), p.theory.matrix()), 1e-8);
        EXPECT_LT(p.error.absolute, 1e-8);
    }
    EXPECT_EQ(panels[0].theory_table(2, 2), 1.0);
    EXPECT_EQ(panels[3].theory_table(1, 1), 1.0);
    EXPECT_EQ(panels[3].expected.label(), "-|01>");
    double total = 0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) total += panels[0].theory_table(r, c);
    EXPECT_EQ(total, 1.0);
}

}  // namespace
}  // namespace densecode::noise
