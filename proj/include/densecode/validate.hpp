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

#include <cstdint>
#include <string>
#include <vector>

#include "densecode/gates.hpp"
#include "densecode/nmrsim.hpp"
#include "densecode/protocol.hpp"

namespace densecode::validation {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions {
    std::uint64_t seed = 20260101;
    nmr::SpinSystem spin_system;
    /// Gate constants under test; swap entries to check the suite notices.
    GateSet gates = GateSet::ideal();
    int ensemble_size = 1000;
};

/// Correspondence table computed with plain complex arithmetic on
/// hand-written matrices, without the gate or protocol code.
CorrespondenceTable brute_force_table();

/// Compares a table with the brute-force enumeration (including signs) and
/// with the printed outputs |10>, |00>, |11>, -|01> of the MinusPhi column.
CheckResult check_table(const CorrespondenceTable& table);

/// Runs every acceptance check in order.
std::vector<CheckResult> run_all(const ValidationOptions& opts);

/// One "[PASS] n name: detail" line per check, then a summary line.
std::string render_report(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace densecode::validation
