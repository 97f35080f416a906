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

#include "densecode/gates.hpp"
#include "densecode/qcore.hpp"

namespace densecode {

/// One of the four dense-coding messages. Message i selects encoding
/// unitary i; the CLI-facing two-bit label is i-1 in binary (1 -> 00,
/// 2 -> 01, 3 -> 10, 4 -> 11).
class Message {
   public:
    /// Throws InvalidInput unless 1 <= i <= 4.
    explicit Message(int i);
    static Message from_bits(int hi, int lo);

    int index() const { return i_; }
    int high_bit() const { return (i_ - 1) >> 1; }
    int low_bit() const { return (i_ - 1) & 1; }
    std::string bits() const;

    friend bool operator==(Message, Message) = default;

   private:
    int i_;
};

/// A decoded computational basis state phase * |y x>.
struct DecodedOutput {
    int y = 0;      // spin b
    int x = 0;      // spin a
    int phase = 1;  // +1 or -1

    int basis() const { return basis_index(y, x); }
    /// "|10>", "-|01>".
    std::string label() const;

    friend bool operator==(const DecodedOutput&, const DecodedOutput&) = default;
};

/// rows: encoding U_a1..U_a4; columns: MinusPhi, PlusPhi, MinusPsi, PlusPsi.
using CorrespondenceTable = std::array<std::array<DecodedOutput, 4>, 4>;

inline constexpr double kReadoutTol = 1e-9;

/// The prepare / encode / decode / readout network over a configurable gate
/// set. Every cell of the correspondence table is produced by running it.
class DenseCodingCircuit {
   public:
    explicit DenseCodingCircuit(GateSet gates = GateSet::ideal());

    /// [flip substitution] -> H_b -> CN_ba applied to |00>.
    PureState prepare_bell(BellVariant v) const;
    /// Encoding unitary on spin a only.
    PureState encode(const PureState& s, Message m) const;
    /// CN_ba then H_b.
    PureState decode(const PureState& s) const;
    /// Throws NotBasisState unless s is within kReadoutTol of +-|yx>.
    static DecodedOutput readout(const PureState& s);
    /// prepare -> encode -> decode -> readout.
    DecodedOutput run(Message m, BellVariant v) const;
    /// Full round trip; the message is recovered by inverting the table column
    /// for v using populations only (the phase sign is ignored).
    Message transmit(Message m, BellVariant v) const;
    CorrespondenceTable table() const;

    const GateSet& gates() const { return gates_; }

   private:
    GateSet gates_;
};

PureState prepare_bell(BellVariant v);
PureState encode(const PureState& s, Message m);
PureState decode(const PureState& s);
DecodedOutput readout(const PureState& s);
Message transmit(Message m, BellVariant v);
CorrespondenceTable table1();

/// Message whose output in `column` has the given populations (y, x).
/// Throws InvalidInput if no row matches.
Message invert_column(const CorrespondenceTable& table, BellVariant column, int y, int x);

}  // namespace densecode
