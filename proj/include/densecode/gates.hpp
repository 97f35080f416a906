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
#include <string>
#include <string_view>

#include "densecode/qcore.hpp"

namespace densecode {

/// The four Bell states reachable from |00> by swapping the leading NOT on
/// spin b for another spin-flip pattern.
enum class BellVariant {
    MinusPhi,  // (|00> - |11>)/sqrt2, NOT on b
    PlusPhi,   // (|00> + |11>)/sqrt2, nothing
    MinusPsi,  // (|01> - |10>)/sqrt2, NOT on b and a
    PlusPsi,   // (|01> + |10>)/sqrt2, NOT on a
};

inline constexpr std::array<BellVariant, 4> kAllVariants{BellVariant::MinusPhi, BellVariant::PlusPhi,
                                                         BellVariant::MinusPsi, BellVariant::PlusPsi};

/// "minus-phi", "plus-phi", "minus-psi", "plus-psi".
std::string_view to_string(BellVariant v);
/// Inverse of to_string; throws InvalidInput for unknown names.
BellVariant parse_variant(std::string_view name);
int variant_index(BellVariant v);

/// Which of the spins get a NOT before the Hadamard.
struct FlipPattern {
    bool flip_b;
    bool flip_a;
};
FlipPattern flip_pattern(BellVariant v);

/// Identifies any gate of the ideal network.
struct GateId {
    enum class Kind { NotA, NotB, HadB, CnotBA, Encode, BellVariantPrep };
    Kind kind;
    int encode_index = 0;                       // valid when kind == Encode
    BellVariant variant = BellVariant::MinusPhi;  // valid when kind == BellVariantPrep

    static GateId not_a() { return {Kind::NotA}; }
    static GateId not_b() { return {Kind::NotB}; }
    static GateId had_b() { return {Kind::HadB}; }
    static GateId cnot_ba() { return {Kind::CnotBA}; }
    static GateId encode(int i);
    static GateId bell_prep(BellVariant v) { return {Kind::BellVariantPrep, 0, v}; }
};

/// sigma_x.
Unitary2 not_gate();
/// (1/sqrt2) [[1, 1], [1, -1]].
Unitary2 hadamard();
/// Control spin b, target spin a.
Unitary4 cnot_ba();
/// Control spin a, target spin b.
Unitary4 cnot_ab();
/// i = 1..4 -> I, sigma_z, sigma_x, i*sigma_y with i*sigma_y = [[0, 1], [-1, 0]].
Unitary2 encoding_unitary(int i);
/// Substitute for the leading NOT on spin b (I, N_b, N_b N_a or N_a).
Unitary4 bell_substitution(BellVariant v);

/// Two-spin unitary for any gate id.
Unitary4 gate_unitary(const GateId& g);

/// The gate constants used by the dense-coding network. Tests swap in
/// corrupted entries to confirm the table self-check catches them.
struct GateSet {
    Unitary2 not_gate;
    Unitary2 hadamard;
    Unitary4 cnot_ba;
    std::array<Unitary2, 4> encodings;

    static GateSet ideal();
    const Unitary2& encoding(int i) const;
};

}  // namespace densecode
