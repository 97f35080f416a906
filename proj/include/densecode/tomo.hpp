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
#include <bitset>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "densecode/qcore.hpp"

namespace densecode::tomo {

/// Product operators sigma_pb (x) sigma_pa indexed by 4*pb + pa with
/// p in {0: I, 1: X, 2: Y, 3: Z}. Index 0 is the identity.
inline constexpr int kNumOperators = 16;
int product_index(int pb, int pa);
Matrix4 product_operator(int index);
/// "II", "IX", ..., "ZZ" (spin b letter first).
std::string product_label(int index);

/// Product operators visible as single-quantum transverse signals: the x/y
/// magnetization of one spin, optionally multiplied by z of the other.
const std::bitset<kNumOperators>& detectable_operators();

enum class ReadoutPulse { I, X90, Y90 };
inline constexpr std::array<ReadoutPulse, 3> kReadoutPulses{ReadoutPulse::I, ReadoutPulse::X90, ReadoutPulse::Y90};
std::string_view to_string(ReadoutPulse p);
Unitary2 readout_unitary(ReadoutPulse p);

/// One readout experiment: readout pulses on both spins, then the
/// expectation of each product operator in the rotated state.
struct ReadoutRecord {
    ReadoutPulse readout_a = ReadoutPulse::I;
    ReadoutPulse readout_b = ReadoutPulse::I;
    std::array<double, kNumOperators> observed{};  // observed[0] == 1
    /// Entries that enter the fit.
    std::bitset<kNumOperators> detected;
};

/// Nine noise-free records, one per readout pair in {I, X90, Y90}^2.
std::vector<ReadoutRecord> simulate_readouts(const DensityMatrix& rho);

/// Minimum eigenvalue below which the reconstruction is clipped to PSD.
inline constexpr double kClipThreshold = kPsdFloor;

/// Least-squares fit of rho = (I + sum_P c_P P)/4 to the detected entries.
/// Throws RankDeficient if the records do not fix all 15 coefficients.
DensityMatrix reconstruct(std::span<const ReadoutRecord> records);

/// |rho_jk| on the basis |00>, |01>, |10>, |11>.
class ModulusTable {
   public:
    ModulusTable() = default;
    explicit ModulusTable(const std::array<std::array<double, 4>, 4>& values);

    double operator()(int row, int col) const { return values_[row][col]; }
    const std::array<std::array<double, 4>, 4>& values() const { return values_; }
    double max_value() const;

    /// Header "row,col,modulus", 16 rows in row-major order.
    std::string to_csv() const;
    static ModulusTable from_csv(std::string_view csv);
    /// {"labels": [...], "modulus": [[...], ...]}
    std::string to_json() const;
    static ModulusTable from_json(std::string_view json);

   private:
    std::array<std::array<double, 4>, 4> values_{};
};

ModulusTable element_modulus_table(const DensityMatrix& rho);

struct ElementError {
    double absolute = 0.0;
    double relative = 0.0;  // absolute / largest theoretical modulus
    int row = 0;
    int col = 0;
};

/// max_jk | |rho_exp,jk| - |rho_th,jk| |.
ElementError max_element_error(const DensityMatrix& rho_exp, const DensityMatrix& rho_theory);
ElementError max_element_error(const ModulusTable& exp, const ModulusTable& theory);

}  // namespace densecode::tomo
