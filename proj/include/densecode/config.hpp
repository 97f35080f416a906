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

// Run configuration and its JSON form. Every field is optional:
//
// {
//   "layer": "ideal" | "pulse",
//   "message": 1..4,
//   "variant": "minus-phi" | "plus-phi" | "minus-psi" | "plus-psi",
//   "format": "text" | "json" | "csv",
//   "seed": 42,
//   "spin_system": {"freq_a_mhz": 500.13, "freq_b_mhz": 125.77, "j_hz": 215,
//                   "t2_a_s": 3.0, "t2_b_s": 0.3, "epsilon": 1e-5},
//   "noise": {"rf_spread": 0.04, "calib_offset": 0.02, "offset_spread_hz": 5,
//             "t2_a_s": 3.0, "t2_b_s": 0.3, "ensemble_size": 1000, "seed": 7}
// }
//
// A present "noise" object turns noise on; its T2 fields default to the
// spin system's.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "densecode/gates.hpp"
#include "densecode/nmrsim.hpp"
#include "densecode/noise.hpp"

namespace densecode {

enum class Layer { Ideal, Pulse };
enum class OutputFormat { Text, Json, Csv };

std::string_view to_string(Layer l);
std::string_view to_string(OutputFormat f);
Layer parse_layer(std::string_view s);
OutputFormat parse_format(std::string_view s);

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct RunConfig {
    Layer layer = Layer::Ideal;
    int message = 1;
    BellVariant variant = BellVariant::MinusPhi;
    nmr::SpinSystem spin_system;
    double epsilon = 1e-5;
    std::optional<noise::ErrorParams> noise;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::string> output_path;
    std::uint64_t seed = kDefaultSeed;

    /// Throws ConfigError; noise is only allowed with the pulse layer.
    void validate() const;
    /// Noise parameters with the run seed applied, or nullopt.
    std::optional<noise::ErrorParams> effective_noise() const;
};

/// Merge a JSON document into `cfg`. Throws ConfigError on malformed input.
void merge_config_json(RunConfig& cfg, std::string_view json_text);
/// Merge a noise document: either {"noise": {...}} or the bare noise object.
void merge_noise_json(RunConfig& cfg, std::string_view json_text);

/// Throws IoError if the file cannot be read.
std::string read_text_file(const std::string& path);
/// Throws IoError if the file cannot be written.
void write_text_file(const std::string& path, std::string_view content);

}  // namespace densecode
