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

#include "densecode/gates.hpp"

#include <cmath>
#include <string>

namespace densecode {

std::string_view to_string(BellVariant v) {
    switch (v) {
        case BellVariant::MinusPhi: return "minus-phi";
        case BellVariant::PlusPhi: return "plus-phi";
        case BellVariant::MinusPsi: return "minus-psi";
        case BellVariant::PlusPsi: return "plus-psi";
    }
    return "?";
}

BellVariant parse_variant(std::string_view name) {
    for (BellVariant v : kAllVariants)
        if (to_string(v) == name) return v;
    throw InvalidInput("unknown Bell variant '" + std::string(name) +
                       "' (expected minus-phi, plus-phi, minus-psi or plus-psi)");
}

int variant_index(BellVariant v) { return static_cast<int>(v); }

FlipPattern flip_pattern(BellVariant v) {
    switch (v) {
        case BellVariant::MinusPhi: return {true, false};
        case BellVariant::PlusPhi: return {false, false};
        case BellVariant::MinusPsi: return {true, true};
        case BellVariant::PlusPsi: return {false, true};
    }
    return {false, false};
}

GateId GateId::encode(int i) {
    if (i < 1 || i > 4) throw InvalidInput("encoding index must be in 1..4, got " + std::to_string(i));
    return {Kind::Encode, i};
}

Unitary2 not_gate() { return Unitary2(pauli::x()); }

Unitary2 hadamard() {
    Matrix2 h;
    h << 1, 1, 1, -1;
    return Unitary2(Matrix2(h / std::sqrt(2.0)));
}

Unitary4 cnot_ba() {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(3, 2) = 1;  // |10> -> |11>
    m(2, 3) = 1;  // |11> -> |10>
    return Unitary4(m);
}

Unitary4 cnot_ab() {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = 1;
    m(2, 2) = 1;
    m(3, 1) = 1;  // |01> -> |11>
    m(1, 3) = 1;  // |11> -> |01>
    return Unitary4(m);
}

Unitary2 encoding_unitary(int i) {
    switch (i) {
        case 1: return Unitary2(pauli::identity());
        case 2: return Unitary2(pauli::z());
        case 3: return Unitary2(pauli::x());
        case 4: {
            Matrix2 iy;
            iy << 0, 1, -1, 0;
            return Unitary2(iy);
        }
        default: throw InvalidInput("encoding index must be in 1..4, got " + std::to_string(i));
    }
}

Unitary4 bell_substitution(BellVariant v) {
    FlipPattern f = flip_pattern(v);
    Unitary2 id;
    return tensor(f.flip_b ? not_gate() : id, f.flip_a ? not_gate() : id);
}

Unitary4 gate_unitary(const GateId& g) {
    switch (g.kind) {
        case GateId::Kind::NotA: return on_spin(Spin::A, not_gate());
        case GateId::Kind::NotB: return on_spin(Spin::B, not_gate());
        case GateId::Kind::HadB: return on_spin(Spin::B, hadamard());
        case GateId::Kind::CnotBA: return cnot_ba();
        case GateId::Kind::Encode: return on_spin(Spin::A, encoding_unitary(g.encode_index));
        case GateId::Kind::BellVariantPrep: return bell_substitution(g.variant);
    }
    throw InvalidInput("unknown gate kind");
}

GateSet GateSet::ideal() {
    return GateSet{densecode::not_gate(),
                   densecode::hadamard(),
                   densecode::cnot_ba(),
                   {encoding_unitary(1), encoding_unitary(2), encoding_unitary(3), encoding_unitary(4)}};
}

const Unitary2& GateSet::encoding(int i) const {
    if (i < 1 || i > 4) throw InvalidInput("encoding index must be in 1..4, got " + std::to_string(i));
    return encodings[static_cast<std::size_t>(i - 1)];
}

}  // namespace densecode
