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

#include "densecode/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace densecode {

Message::Message(int i) : i_(i) {
    if (i < 1 || i > 4) throw InvalidInput("message must be in 1..4, got " + std::to_string(i));
}

Message Message::from_bits(int hi, int lo) {
    if ((hi != 0 && hi != 1) || (lo != 0 && lo != 1)) throw InvalidInput("message bits must be 0 or 1");
    return Message(2 * hi + lo + 1);
}

std::string Message::bits() const { return std::to_string(high_bit()) + std::to_string(low_bit()); }

std::string DecodedOutput::label() const {
    std::string s = phase < 0 ? "-|" : "|";
    return s + std::to_string(y) + std::to_string(x) + ">";
}

DenseCodingCircuit::DenseCodingCircuit(GateSet gates) : gates_(std::move(gates)) {}

PureState DenseCodingCircuit::prepare_bell(BellVariant v) const {
    FlipPattern f = flip_pattern(v);
    Unitary2 id;
    Unitary4 flips = tensor(f.flip_b ? gates_.not_gate : id, f.flip_a ? gates_.not_gate : id);
    Unitary4 had_b = on_spin(Spin::B, gates_.hadamard);

    PureState s = PureState::basis(0);
    s = apply(flips, s);
    s = apply(had_b, s);
    return apply(gates_.cnot_ba, s);
}

PureState DenseCodingCircuit::encode(const PureState& s, Message m) const {
    return apply(on_spin(Spin::A, gates_.encoding(m.index())), s);
}

PureState DenseCodingCircuit::decode(const PureState& s) const {
    PureState t = apply(gates_.cnot_ba, s);
    return apply(on_spin(Spin::B, gates_.hadamard), t);
}

DecodedOutput DenseCodingCircuit::readout(const PureState& s) {
    std::array<double, 4> p = probabilities(s);
    int k = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
    if (p[k] < 1.0 - kReadoutTol)
        throw NotBasisState("state is not a computational basis state (max population " + std::to_string(p[k]) +
                            ")");
    Complex amp = s[k];
    // Only real +-1 amplitudes are sign-decodable; the decode chain never
    // leaves an imaginary phase.
    if (std::abs(amp.imag()) > 1e-6)
        throw NotBasisState("basis amplitude carries a non-real phase");
    return DecodedOutput{k >> 1, k & 1, amp.real() < 0 ? -1 : 1};
}

DecodedOutput DenseCodingCircuit::run(Message m, BellVariant v) const {
    return readout(decode(encode(prepare_bell(v), m)));
}

CorrespondenceTable DenseCodingCircuit::table() const {
    CorrespondenceTable t{};
    for (int i = 1; i <= 4; ++i)
        for (BellVariant v : kAllVariants) t[i - 1][variant_index(v)] = run(Message(i), v);
    return t;
}

Message DenseCodingCircuit::transmit(Message m, BellVariant v) const {
    DecodedOutput out = run(m, v);
    return invert_column(table(), v, out.y, out.x);
}

Message invert_column(const CorrespondenceTable& table, BellVariant column, int y, int x) {
    const int c = variant_index(column);
    for (int i = 0; i < 4; ++i) {
        const DecodedOutput& cell = table[i][c];
        if (cell.y == y && cell.x == x) return Message(i + 1);
    }
    throw InvalidInput("no message decodes to |" + std::to_string(y) + std::to_string(x) + "> for variant " +
                       std::string(to_string(column)));
}

namespace {
const DenseCodingCircuit& ideal_circuit() {
    static const DenseCodingCircuit c;
    return c;
}
}  // namespace

PureState prepare_bell(BellVariant v) { return ideal_circuit().prepare_bell(v); }
PureState encode(const PureState& s, Message m) { return ideal_circuit().encode(s, m); }
PureState decode(const PureState& s) { return ideal_circuit().decode(s); }
DecodedOutput readout(const PureState& s) { return DenseCodingCircuit::readout(s); }
Message transmit(Message m, BellVariant v) { return ideal_circuit().transmit(m, v); }
CorrespondenceTable table1() { return ideal_circuit().table(); }

}  // namespace densecode
