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

// Pulse-level model of the 1H (spin a) / 13C (spin b) pair in the doubly
// rotating frame. RF pulses are instantaneous rotations
//   X(theta) = exp(-i theta sigma_x / 2)   (likewise Y, Z)
// and delays evolve under the weak scalar coupling
//   H = 2 pi J (sigma_z^b / 2)(sigma_z^a / 2).

#include <array>
#include <variant>
#include <vector>

#include "densecode/gates.hpp"
#include "densecode/protocol.hpp"
#include "densecode/qcore.hpp"

namespace densecode::nmr {

enum class Axis { X, Y, Z };

struct SpinSystem {
    double freq_a_mhz = 500.13;  // 1H
    double freq_b_mhz = 125.77;  // 13C
    double j_hz = 215.0;         // not a measured value; overridable
    double t2_a_s = 3.0;
    double t2_b_s = 0.3;
    /// gamma_a / gamma_b, equal to the Larmor frequency ratio.
    double polarization_ratio = 500.13 / 125.77;

    /// Throws InvalidInput unless frequencies, J and T2 values are positive
    /// and finite.
    void validate() const;
    /// Recompute polarization_ratio from the two frequencies.
    void sync_polarization_ratio() { polarization_ratio = freq_a_mhz / freq_b_mhz; }
};

struct Rf {
    Spin spin;
    Axis axis;
    double angle;        // radians
    int phase_sign = 1;  // -1 rotates about the opposite axis
};

struct Delay {
    double duration;  // seconds
};

using PulseEvent = std::variant<Rf, Delay>;

/// Time-ordered list of pulse events.
class PulseSequence {
   public:
    PulseSequence() = default;
    PulseSequence(std::initializer_list<PulseEvent> events);

    /// Throws InvalidInput for a non-finite angle or negative duration.
    PulseSequence& push(const PulseEvent& e);
    PulseSequence& append(const PulseSequence& other);

    const std::vector<PulseEvent>& events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }
    double total_delay() const;

   private:
    std::vector<PulseEvent> events_;
};

Unitary2 rotation(Axis axis, double angle);
/// exp(-i angle sigma_axis / 2) on `spin`.
Unitary4 rf_unitary(Spin spin, Axis axis, double angle);
/// Coupling evolution for `t` seconds (no chemical shift).
Unitary4 j_evolution(const SpinSystem& sys, double t);
/// Coupling evolution plus resonance offsets (Hz) on each spin.
Unitary4 free_evolution(const SpinSystem& sys, double t, double offset_a_hz, double offset_b_hz);

Unitary4 event_unitary(const PulseEvent& e, const SpinSystem& sys);
/// Later events multiply from the left.
Unitary4 compile(const PulseSequence& seq, const SpinSystem& sys);

/// X(pi) on `spin`: -i sigma_x, the NOT gate up to phase.
PulseSequence not_pulse(Spin spin);

/// Y_b(-pi/2) followed by X_b(pi). Compiles to i (sigma_z - sigma_x)/sqrt2,
/// which is Z H Z up to phase rather than H itself.
PulseSequence pseudo_hadamard_b();

struct CnotOptions {
    Spin control = Spin::B;
    /// Split the coupling delay around a pair of X(pi) pulses on both spins
    /// with opposite phases, which refocuses resonance offsets and cancels
    /// a common pi-pulse calibration error within the pair.
    bool refocus = true;
};

/// CNOT built from Y(-/+pi/2) conjugation of a 1/(2J) coupling delay,
/// X(-pi/2) on the target and Z(-pi/2) on the control. Equal to the ideal
/// CNOT up to a global phase.
PulseSequence cnot_pulse_sequence(const SpinSystem& sys, CnotOptions opts = {});

/// i = 1: empty; 2: Z_a(pi); 3: X_a(pi); 4: Y_a(pi).
PulseSequence encoding_pulse(int i);

/// Bell preparation pulses for variant v: flips, pseudo-Hadamard, CNOT.
PulseSequence bell_prep_pulses(const SpinSystem& sys, BellVariant v, bool refocus = true);
/// CNOT then pseudo-Hadamard.
PulseSequence decode_pulses(const SpinSystem& sys, bool refocus = true);
/// Complete pulse program: preparation, encoding, decoding.
PulseSequence protocol_program(const SpinSystem& sys, Message m, BellVariant v, bool refocus = true);

/// High-temperature equilibrium state
///   I/4 + epsilon (ratio sigma_z^a / 2 + sigma_z^b / 2).
/// Throws InvalidInput if epsilon is non-finite or large enough to make the
/// state non-positive.
DensityMatrix thermal_state(const SpinSystem& sys, double epsilon);

/// Population permutation prefixes for temporal averaging. k = 0 is empty;
/// k = 1 cycles |01> -> |10> -> |11> -> |01>; k = 2 is the inverse cycle.
PulseSequence permutation_pulses(const SpinSystem& sys, int k);

/// Average over the three permutation prefixes of the circuit output.
DensityMatrix temporal_average(const SpinSystem& sys, double epsilon, const PulseSequence& circuit);

/// rho = alpha I/4 + beta |k><k| + residual.
struct PseudoPureFit {
    double alpha = 0.0;
    double beta = 0.0;
    double residual = 0.0;  // max elementwise |residual|
};

/// Best pseudo-pure description of rho around basis state k: the identity
/// weight is taken from the mean of the other three populations.
PseudoPureFit fit_pseudo_pure(const DensityMatrix& rho, int k);

/// Deviation of rho from I/4 rescaled to unit trace on its dominant part,
/// i.e. (rho - alpha I/4) / beta for the fit above.
Matrix4 normalized_deviation(const DensityMatrix& rho, int k);

}  // namespace densecode::nmr
