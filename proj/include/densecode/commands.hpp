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

// Command implementations behind the CLI. Each returns the text to print
// and the process exit code; configuration problems throw ConfigError and
// file problems throw IoError.

#include <string>

#include "densecode/config.hpp"
#include "densecode/protocol.hpp"

namespace densecode::commands {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsage = 2, kIo = 3 };

struct CommandResult {
    int exit_code = kOk;
    std::string output;
};

std::string render_table(const CorrespondenceTable& table, OutputFormat format);

/// Computed correspondence table, self-checked against brute force.
CommandResult table(const RunConfig& cfg);
/// One protocol run at the configured layer.
CommandResult run(const RunConfig& cfg);
/// Theoretical and simulated element-modulus tables for the four encodings.
/// Writes to cfg.output_path when set.
CommandResult fig4(const RunConfig& cfg);
/// Readout records and reconstruction for one message.
CommandResult tomo(const RunConfig& cfg);
/// Acceptance checks; exit 1 if any fails.
CommandResult validate(const RunConfig& cfg);

}  // namespace densecode::commands
