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

#include <cmath>
#include <numbers>
#include <string>

namespace densecode::nmr {

namespace {

constexpr double kPi = std::numbers::pi;

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

Spin other(Spin s) { return s == Spin::A ? Spin::B : Spin::A; }

// Eigenvalue of sigma_z on the given spin for basis index k (+1 for |0>).
double z_sign(Spin spin, int k) {
    int bit = spin == Spin::B ? (k >> 1) & 1 : k & 1;
    return bit == 0 ? 1.0 : -1.0;
}

}  // namespace

void SpinSystem::validate() const {
    if (!positive_finite(freq_a_mhz) || !positive_finite(freq_b_mhz))
        throw InvalidInput("Larmor frequencies must be positive");
    if (!positive_finite(j_hz)) throw InvalidInput("J coupling must be positive");
    if (!positive_finite(t2_a_s) || !positive_finite(t2_b_s)) throw InvalidInput("T2 values must be positive");
    if (!positive_finite(polarization_ratio)) throw InvalidInput("polarization ratio must be positive");
}

// ---- PulseSequence ------------------------------------------------------

PulseSequence::PulseSequence(std::initializer_list<PulseEvent> events) {
    for (const auto& e : events) push(e);
}

PulseSequence& PulseSequence::push(const PulseEvent& e) {
    if (const auto* rf = std::get_if<Rf>(&e)) {
        if (!std::isfinite(rf->angle)) throw InvalidInput("pulse angle must be finite");
        if (rf->phase_sign != 1 && rf->phase_sign != -1) throw InvalidInput("pulse phase sign must be +1 or -1");
    } else {
        double d = std::get<Delay>(e).duration;
        if (!std::isfinite(d) || d < 0.0) throw InvalidInput("delay duration must be finite and >= 0");
    }
    events_.push_back(e);
    return *this;
}

PulseSequence& PulseSequence::append(const PulseSequence& other) {
    events_.insert(events_.end(), other.events_.begin(), other.events_.end());
    return *this;
}

double PulseSequence::total_delay() const {
    double t = 0.0;
    for (const auto& e : events_)
        if (const auto* d = std::get_if<Delay>(&e)) t += d->duration;
    return t;
}

// ---- Elementary propagators ---------------------------------------------

Unitary2 rotation(Axis axis, double angle) {
    Matrix2 sigma = axis == Axis::X ? pauli::x() : axis == Axis::Y ? pauli::y() : pauli::z();
    Matrix2 m = std::cos(angle / 2) * Matrix2::Identity() - Complex(0, std::sin(angle / 2)) * sigma;
    return Unitary2(m);
}

Unitary4 rf_unitary(Spin spin, Axis axis, double angle) { return on_spin(spin, rotation(axis, angle)); }

Unitary4 free_evolution(const SpinSystem& sys, double t, double offset_a_hz, double offset_b_hz) {
    if (!std::isfinite(t) || t < 0.0) throw InvalidInput("evolution time must be finite and >= 0");
    Matrix4 m = Matrix4::Zero();
    for (int k = 0; k < 4; ++k) {
        double za = z_sign(Spin::A, k);
        double zb = z_sign(Spin::B, k);
        // Energies in Hz of H / (2 pi): J zb za / 4 + offsets * z / 2.
        double e = sys.j_hz * zb * za / 4.0 + offset_a_hz * za / 2.0 + offset_b_hz * zb / 2.0;
        m(k, k) = std::polar(1.0, -2.0 * kPi * e * t);
    }
    return Unitary4(m);
}

Unitary4 j_evolution(const SpinSystem& sys, double t) { return free_evolution(sys, t, 0.0, 0.0); }

Unitary4 event_unitary(const PulseEvent& e, const SpinSystem& sys) {
    if (const auto* rf = std::get_if<Rf>(&e)) return rf_unitary(rf->spin, rf->axis, rf->phase_sign * rf->angle);
    return j_evolution(sys, std::get<Delay>(e).duration);
}

Unitary4 compile(const PulseSequence& seq, const SpinSystem& sys) {
    Matrix4 u = Matrix4::Identity();
    for (const auto& e : seq.events()) u = (event_unitary(e, sys).matrix() * u).eval();
    return Unitary4(u);
}

// ---- Gate realizations --------------------------------------------------

PulseSequence not_pulse(Spin spin) { return {Rf{spin, Axis::X, kPi}}; }

PulseSequence pseudo_hadamard_b() { return {Rf{Spin::B, Axis::Y, -kPi / 2}, Rf{Spin::B, Axis::X, kPi}}; }

PulseSequence cnot_pulse_sequence(const SpinSystem& sys, CnotOptions opts) {
    sys.validate();
    const Spin control = opts.control;
    const Spin target = other(control);
    const double tau = 1.0 / (2.0 * sys.j_hz);

    PulseSequence seq;
    // Rotate the target's z axis onto x so the zz coupling acts as z(control) x(target).
    seq.push(Rf{target, Axis::Y, -kPi / 2});
    if (opts.refocus) {
        seq.push(Delay{tau / 2});
        seq.push(Rf{Spin::A, Axis::X, kPi, +1});
        seq.push(Rf{Spin::B, Axis::X, kPi, +1});
        seq.push(Delay{tau / 2});
        seq.push(Rf{Spin::A, Axis::X, kPi, -1});
        seq.push(Rf{Spin::B, Axis::X, kPi, -1});
    } else {
        seq.push(Delay{tau});
    }
    seq.push(Rf{target, Axis::Y, kPi / 2});
    seq.push(Rf{target, Axis::X, -kPi / 2});
    seq.push(Rf{control, Axis::Z, -kPi / 2});
    return seq;
}

PulseSequence encoding_pulse(int i) {
    switch (i) {
        case 1: return {};
        case 2: return {Rf{Spin::A, Axis::Z, kPi}};
        case 3: return {Rf{Spin::A, Axis::X, kPi}};
        case 4: return {Rf{Spin::A, Axis::Y, kPi}};
        default: throw InvalidInput("encoding index must be in 1..4, got " + std::to_string(i));
    }
}

PulseSequence bell_prep_pulses(const SpinSystem& sys, BellVariant v, bool refocus) {
    FlipPattern f = flip_pattern(v);
    PulseSequence seq;
    if (f.flip_b) seq.append(not_pulse(Spin::B));
    if (f.flip_a) seq.append(not_pulse(Spin::A));
    seq.append(pseudo_hadamard_b());
    seq.append(cnot_pulse_sequence(sys, {Spin::B, refocus}));
    return seq;
}

PulseSequence decode_pulses(const SpinSystem& sys, bool refocus) {
    PulseSequence seq = cnot_pulse_sequence(sys, {Spin::B, refocus});
    seq.append(pseudo_hadamard_b());
    return seq;
}

PulseSequence protocol_program(const SpinSystem& sys, Message m, BellVariant v, bool refocus) {
    PulseSequence seq = bell_prep_pulses(sys, v, refocus);
    seq.append(encoding_pulse(m.index()));
    seq.append(decode_pulses(sys, refocus));
    return seq;
}

// ---- Pseudo-pure preparation --------------------------------------------

DensityMatrix thermal_state(const SpinSystem& sys, double epsilon) {
    if (!std::isfinite(epsilon)) throw InvalidInput("epsilon must be finite");
    Matrix4 rho = Matrix4::Zero();
    for (int k = 0; k < 4; ++k) {
        double dev = epsilon * (sys.polarization_ratio * z_sign(Spin::A, k) + z_sign(Spin::B, k)) / 2.0;
        double p = 0.25 + dev;
        if (p < 0.0)
            throw InvalidInput("epsilon " + std::to_string(epsilon) + " too large: population of basis state " +
                               std::to_string(k) + " would be negative");
        rho(k, k) = p;
    }
    return DensityMatrix(rho);
}

PulseSequence permutation_pulses(const SpinSystem& sys, int k) {
    PulseSequence seq;
    CnotOptions ctrl_a{Spin::A, true};
    CnotOptions ctrl_b{Spin::B, true};
    switch (k) {
        case 0: break;
        case 1:
            seq.append(cnot_pulse_sequence(sys, ctrl_a));
            seq.append(cnot_pulse_sequence(sys, ctrl_b));
            break;
        case 2:
            seq.append(cnot_pulse_sequence(sys, ctrl_b));
            seq.append(cnot_pulse_sequence(sys, ctrl_a));
            break;
        default: throw InvalidInput("permutation index must be 0, 1 or 2");
    }
    return seq;
}

DensityMatrix temporal_average(const SpinSystem& sys, double epsilon, const PulseSequence& circuit) {
    DensityMatrix rho0 = thermal_state(sys, epsilon);
    Unitary4 u = compile(circuit, sys);
    Matrix4 sum = Matrix4::Zero();
    for (int k = 0; k < 3; ++k) {
        Unitary4 p = compile(permutation_pulses(sys, k), sys);
        sum += evolve(u * p, rho0).matrix();
    }
    return DensityMatrix(Matrix4(sum / 3.0));
}

PseudoPureFit fit_pseudo_pure(const DensityMatrix& rho, int k) {
    if (k < 0 || k > 3) throw InvalidInput("basis index out of range");
    double background = 0.0;
    for (int j = 0; j < 4; ++j)
        if (j != k) background += rho(j, j).real();
    background /= 3.0;

    PseudoPureFit fit;
    fit.alpha = 4.0 * background;
    fit.beta = rho(k, k).real() - background;
    Matrix4 model = background * Matrix4::Identity();
    model(k, k) += fit.beta;
    fit.residual = max_abs(Matrix4(rho.matrix() - model));
    return fit;
}

Matrix4 normalized_deviation(const DensityMatrix& rho, int k) {
    PseudoPureFit fit = fit_pseudo_pure(rho, k);
    if (fit.beta == 0.0) throw InvalidInput("state has no pseudo-pure component");
    return (rho.matrix() - 0.25 * fit.alpha * Matrix4::Identity()) / fit.beta;
}

}  // namespace densecode::nmr
