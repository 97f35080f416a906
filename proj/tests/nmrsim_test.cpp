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

#include "densecode/nmrsim.hpp"

#include <numbers>

#include <gtest/gtest.h>

#include "densecode/error.hpp"
#include "densecode/random.hpp"
#include "support.hpp"

namespace densecode::nmr {
namespace {

using std::numbers::pi;
using testing_support::from_oracle;
using testing_support::to_oracle;

const SpinSystem kSys;

oracle::M2 oracle_rotation(Axis axis, double angle) {
    switch (axis) {
        case Axis::X: return oracle::rx(angle);
        case Axis::Y: return oracle::ry(angle);
        case Axis::Z: return oracle::rz(angle);
    }
    return oracle::kId2;
}

TEST(SpinSystem, DefaultsAndValidation) {
    EXPECT_DOUBLE_EQ(kSys.polarization_ratio, 500.13 / 125.77);
    EXPECT_NEAR(kSys.polarization_ratio, 3.976, 1e-3);
    EXPECT_NO_THROW(kSys.validate());
    SpinSystem bad = kSys;
    bad.j_hz = -1;
    EXPECT_THROW(bad.validate(), InvalidInput);
    bad = kSys;
    bad.t2_b_s = 0;
    EXPECT_THROW(bad.validate(), InvalidInput);
}

TEST(PulseSequence, RejectsBadEvents) {
    PulseSequence s;
    EXPECT_THROW(s.push(Delay{-1e-3}), InvalidInput);
    EXPECT_THROW(s.push(Rf{Spin::A, Axis::X, std::nan("")}), InvalidInput);
    EXPECT_TRUE(s.empty());
}

TEST(Rotation, MatchesClosedForm) {
    Rng rng(5);
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
        for (int n = 0; n < 20; ++n) {
            double t = (rng.uniform() - 0.5) * 4 * pi;
            Unitary4 u = rf_unitary(Spin::B, ax, t);
            EXPECT_LT(oracle::max_diff(to_oracle(u.matrix()), oracle::kron(oracle_rotation(ax, t), oracle::kId2)),
                      1e-14);
            u = rf_unitary(Spin::A, ax, t);
            EXPECT_LT(oracle::max_diff(to_oracle(u.matrix()), oracle::kron(oracle::kId2, oracle_rotation(ax, t))),
                      1e-14);
        }
    }
}

TEST(Rotation, Examples) {
    Matrix4 x_pi = rf_unitary(Spin::B, Axis::X, pi).matrix();
    Matrix4 expect = Complex(0, -1) * on_spin(Spin::B, Unitary2(pauli::x())).matrix();
    EXPECT_LT(max_abs(Matrix4(x_pi - expect)), 1e-15);
    EXPECT_TRUE(rf_unitary(Spin::A, Axis::X, 0).matrix().isIdentity(0));
    Unitary4 half = rf_unitary(Spin::A, Axis::Y, pi / 2);
    EXPECT_LT(max_abs(Matrix4((half * half).matrix() - rf_unitary(Spin::A, Axis::Y, pi).matrix())), 1e-15);
}

TEST(Rotation, AngleAdditivity) {
    Rng rng(6);
    for (int n = 0; n < 200; ++n) {
        Axis ax = static_cast<Axis>(n % 3);
        Spin sp = n % 2 ? Spin::A : Spin::B;
        double a = (rng.uniform() - 0.5) * 10, b = (rng.uniform() - 0.5) * 10;
        Unitary4 lhs = rf_unitary(sp, ax, a) * rf_unitary(sp, ax, b);
        EXPECT_LT(max_abs(Matrix4(lhs.matrix() - rf_unitary(sp, ax, a + b).matrix())), 1e-13);
    }
}

TEST(JEvolution, KnownTimes) {
    EXPECT_TRUE(j_evolution(kSys, 0.0).matrix().isIdentity(0));
    Unitary4 quarter = j_evolution(kSys, 1.0 / (2 * kSys.j_hz));
    const Complex m = std::exp(Complex(0, -pi / 4)), p = std::exp(Complex(0, pi / 4));
    Matrix4 expect = Vector4(m, p, p, m).asDiagonal();
    EXPECT_LT(max_abs(Matrix4(quarter.matrix() - expect)), 1e-14);
    EXPECT_LT(phase_aligned_distance(j_evolution(kSys, 2.0 / kSys.j_hz).matrix(), Matrix4::Identity()), 1e-12);
}

TEST(JEvolution, MatchesOracleAtRandomTimes) {
    Rng rng(8);
    for (int n = 0; n < 50; ++n) {
        double t = rng.uniform() * 0.02;
        EXPECT_LT(oracle::max_diff(to_oracle(j_evolution(kSys, t).matrix()), oracle::j_coupling(kSys.j_hz, t)), 1e-13);
    }
}

TEST(FreeEvolution, OffsetsAddZRotations) {
    double t = 1e-3, fa = 40.0, fb = -25.0;
    oracle::M4 expect =
        oracle::mul(oracle::j_coupling(kSys.j_hz, t),
                    oracle::kron(oracle::rz(2 * pi * fb * t), oracle::rz(2 * pi * fa * t)));
    EXPECT_LT(oracle::max_diff(to_oracle(free_evolution(kSys, t, fa, fb).matrix()), expect), 1e-13);
}

TEST(Compile, EmptyAndSinglePulse) {
    EXPECT_TRUE(compile(PulseSequence{}, kSys).matrix().isIdentity(0));
    PulseSequence s{Rf{Spin::B, Axis::X, pi}};
    EXPECT_EQ(compile(s, kSys).matrix(), rf_unitary(Spin::B, Axis::X, pi).matrix());
}

TEST(Compile, TimeOrder) {
    PulseSequence s{Rf{Spin::A, Axis::X, pi / 2}, Rf{Spin::A, Axis::Y, pi / 2}};
    Unitary4 expect = rf_unitary(Spin::A, Axis::Y, pi / 2) * rf_unitary(Spin::A, Axis::X, pi / 2);
    EXPECT_LT(max_abs(Matrix4(compile(s, kSys).matrix() - expect.matrix())), 1e-15);
}

TEST(Compile, RandomSequencesAreUnitary) {
    Rng rng(9);
    for (int n = 0; n < 200; ++n) {
        PulseSequence s;
        int len = 1 + static_cast<int>(rng.uniform() * 30);
        for (int k = 0; k < len; ++k) {
            if (rng.uniform() < 0.3)
                s.push(Delay{rng.uniform() * 0.01});
            else
                s.push(Rf{rng.uniform() < 0.5 ? Spin::A : Spin::B, static_cast<Axis>(static_cast<int>(rng.uniform() * 3)),
                          (rng.uniform() - 0.5) * 4 * pi, rng.uniform() < 0.5 ? 1 : -1});
        }
        EXPECT_TRUE(is_unitary(compile(s, kSys).matrix(), 1e-10));
    }
}

TEST(Compile, PhaseSignReversesRotation) {
    PulseSequence s{Rf{Spin::A, Axis::X, pi / 3, -1}};
    EXPECT_LT(max_abs(Matrix4(compile(s, kSys).matrix() - rf_unitary(Spin::A, Axis::X, -pi / 3).matrix())), 1e-15);
}

TEST(NotPulse, IsSigmaXUpToPhase) {
    Matrix4 u = compile(not_pulse(Spin::B), kSys).matrix();
    EXPECT_LT(phase_aligned_distance(u, on_spin(Spin::B, not_gate()).matrix()), 1e-14);
}

TEST(PseudoHadamard, EqualsIZHZ) {
    Matrix2 z = pauli::z();
    Matrix2 zhz = Complex(0, 1) * z * hadamard().matrix() * z;
    Matrix4 expect = on_spin(Spin::B, Unitary2(zhz)).matrix();
    Unitary4 u = compile(pseudo_hadamard_b(), kSys);
    EXPECT_LT(max_abs(Matrix4(u.matrix() - expect)), 1e-12);
    EXPECT_LT(phase_aligned_distance((u * u).matrix(), Matrix4::Identity()), 1e-12);
    auto p = probabilities(apply(u, PureState::basis(1, 0)));
    EXPECT_NEAR(p[0], 0.5, 1e-12);
    EXPECT_NEAR(p[2], 0.5, 1e-12);
}

TEST(CnotSequence, MatchesIdealAndProductIdentity) {
    for (bool refocus : {true, false}) {
        Matrix4 u = compile(cnot_pulse_sequence(kSys, {Spin::B, refocus}), kSys).matrix();
        EXPECT_LT(phase_aligned_distance(u, cnot_ba().matrix()), 1e-9);
        EXPECT_LT(oracle::phase_aligned_diff(to_oracle(u), oracle::cnot_from_product_identity()), 1e-9);
        EXPECT_LT(oracle::phase_aligned_diff(to_oracle(u), oracle::cnot_ba()), 1e-9);
    }
    EXPECT_LT(oracle::max_diff(oracle::cnot_from_product_identity(), oracle::cnot_ba()), 1e-14);
}

TEST(CnotSequence, ControlOnA) {
    Matrix4 u = compile(cnot_pulse_sequence(kSys, {Spin::A, true}), kSys).matrix();
    EXPECT_LT(phase_aligned_distance(u, cnot_ab().matrix()), 1e-9);
}

TEST(CnotSequence, TruthTableAndDelay) {
    Unitary4 u = compile(cnot_pulse_sequence(kSys), kSys);
    EXPECT_NEAR(probabilities(apply(u, PureState::basis(1, 0)))[3], 1.0, 1e-12);
    EXPECT_NEAR(cnot_pulse_sequence(kSys).total_delay(), 1.0 / (2 * kSys.j_hz), 1e-15);
    EXPECT_NEAR(cnot_pulse_sequence(kSys).total_delay() * 1e3, 2.326, 5e-4);
}

TEST(CnotSequence, FollowsConfiguredCoupling) {
    SpinSystem sys = kSys;
    sys.j_hz = 140.0;
    Matrix4 u = compile(cnot_pulse_sequence(sys), sys).matrix();
    EXPECT_LT(phase_aligned_distance(u, cnot_ba().matrix()), 1e-9);
}

TEST(EncodingPulse, ProportionalToPaulis) {
    const Complex mi(0, -1);
    Matrix4 x = on_spin(Spin::A, Unitary2(pauli::x())).matrix();
    Matrix4 y = on_spin(Spin::A, Unitary2(pauli::y())).matrix();
    Matrix4 z = on_spin(Spin::A, Unitary2(pauli::z())).matrix();
    EXPECT_TRUE(compile(encoding_pulse(1), kSys).matrix().isIdentity(0));
    EXPECT_LT(max_abs(Matrix4(compile(encoding_pulse(2), kSys).matrix() - mi * z)), 1e-15);
    EXPECT_LT(max_abs(Matrix4(compile(encoding_pulse(3), kSys).matrix() - mi * x)), 1e-15);
    EXPECT_LT(max_abs(Matrix4(compile(encoding_pulse(4), kSys).matrix() - mi * y)), 1e-15);
    for (int i = 1; i <= 4; ++i)
        EXPECT_LT(phase_aligned_distance(compile(encoding_pulse(i), kSys).matrix(),
                                         on_spin(Spin::A, encoding_unitary(i)).matrix()),
                  1e-14);
}

TEST(ProtocolProgram, PopulationsMatchIdealLayer) {
    for (bool refocus : {true, false}) {
        for (int m = 1; m <= 4; ++m) {
            for (BellVariant v : kAllVariants) {
                Unitary4 u = compile(protocol_program(kSys, Message(m), v, refocus), kSys);
                auto pulse = probabilities(apply(u, PureState::basis(0)));
                oracle::V4 ideal = oracle::protocol_output(m, variant_index(v));
                for (int k = 0; k < 4; ++k) EXPECT_NEAR(pulse[k], std::norm(ideal[k]), 1e-9);
            }
        }
    }
}

TEST(ThermalState, Examples) {
    DensityMatrix zero = thermal_state(kSys, 0.0);
    EXPECT_LT(max_abs(Matrix4(zero.matrix() - Matrix4::Identity() / 4)), 1e-15);
    auto p = probabilities(thermal_state(kSys, 1e-5));
    EXPECT_GT(p[0], p[1]);
    EXPECT_GT(p[0], p[2]);
    EXPECT_LT(p[3], p[1]);
    EXPECT_LT(p[3], p[2]);
    EXPECT_THROW(thermal_state(kSys, 1.0), InvalidInput);
}

TEST(TemporalAverage, PermutationsEqualizeExcitedPopulations) {
    DensityMatrix th = thermal_state(kSys, 1e-4);
    std::array<double, 4> sum{};
    for (int k = 0; k < 3; ++k) {
        auto p = probabilities(evolve(compile(permutation_pulses(kSys, k), kSys), th));
        for (int j = 0; j < 4; ++j) sum[j] += p[j];
    }
    EXPECT_NEAR(sum[1], sum[2], 1e-15);
    EXPECT_NEAR(sum[2], sum[3], 1e-15);
    EXPECT_GT(sum[0], sum[1]);
}

TEST(TemporalAverage, InitialDeviationIsPseudoPure) {
    for (double eps : {1e-6, 1e-5, 1e-4, 1e-3}) {
        DensityMatrix avg = temporal_average(kSys, eps, PulseSequence{});
        Matrix4 target = Matrix4::Zero();
        target(0, 0) = 1;
        EXPECT_LT(max_abs(Matrix4(normalized_deviation(avg, 0) - target)), 1e-10) << eps;
        PseudoPureFit fit = fit_pseudo_pure(avg, 0);
        EXPECT_GT(fit.beta, 0.0);
        EXPECT_LT(fit.residual, 1e-15);
    }
}

TEST(TemporalAverage, ProtocolOutputDeviation) {
    DensityMatrix avg = temporal_average(kSys, 1e-5, protocol_program(kSys, Message(1), BellVariant::MinusPhi));
    Matrix4 target = Matrix4::Zero();
    target(2, 2) = 1;
    EXPECT_LT(max_abs(Matrix4(normalized_deviation(avg, 2) - target)), 1e-9);
}

TEST(TemporalAverage, ZeroPolarizationStaysMixed) {
    DensityMatrix avg = temporal_average(kSys, 0.0, protocol_program(kSys, Message(3), BellVariant::PlusPsi));
    EXPECT_LT(max_abs(Matrix4(avg.matrix() - Matrix4::Identity() / 4)), 1e-15);
}

}  // namespace
}  // namespace densecode::nmr
