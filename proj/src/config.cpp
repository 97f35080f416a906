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

#include "densecode/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace densecode {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

template <typename T>
void read_field(const json& obj, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("field '") + key + "' has the wrong type");
    }
}

json parse_object(std::string_view text, const char* what) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string(what) + " is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(std::string(what) + " must be a JSON object");
    return doc;
}

void merge_noise_object(RunConfig& cfg, const json& n) {
    if (!n.is_object()) throw ConfigError("'noise' must be an object");
    reject_unknown(n, {"rf_spread", "calib_offset", "offset_spread_hz", "t2_a_s", "t2_b_s", "ensemble_size", "seed"},
                   "noise");
    noise::ErrorParams p = cfg.noise.value_or(noise::ErrorParams{});
    if (!cfg.noise) {
        p.t2_a_s = cfg.spin_system.t2_a_s;
        p.t2_b_s = cfg.spin_system.t2_b_s;
    }
    read_field(n, "rf_spread", p.rf_spread);
    read_field(n, "calib_offset", p.calib_offset);
    read_field(n, "offset_spread_hz", p.offset_spread_hz);
    read_field(n, "t2_a_s", p.t2_a_s);
    read_field(n, "t2_b_s", p.t2_b_s);
    read_field(n, "ensemble_size", p.ensemble_size);
    read_field(n, "seed", cfg.seed);
    try {
        p.validate();
    } catch (const InvalidInput& e) {
        throw ConfigError(std::string("noise: ") + e.what());
    }
    cfg.noise = p;
}

}  // namespace

std::string_view to_string(Layer l) { return l == Layer::Ideal ? "ideal" : "pulse"; }

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "?";
}

Layer parse_layer(std::string_view s) {
    if (s == "ideal") return Layer::Ideal;
    if (s == "pulse") return Layer::Pulse;
    throw ConfigError("unknown layer '" + std::string(s) + "' (expected ideal or pulse)");
}

OutputFormat parse_format(std::string_view s) {
    if (s == "text") return OutputFormat::Text;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw ConfigError("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

void RunConfig::validate() const {
    if (message < 1 || message > 4) throw ConfigError("message must be in 1..4");
    if (noise && layer != Layer::Pulse) throw ConfigError("noise requires --layer pulse");
    try {
        spin_system.validate();
        if (noise) noise->validate();
    } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
    }
    if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon > 1e-3)
        throw ConfigError("epsilon must be in [0, 1e-3]");
}

std::optional<noise::ErrorParams> RunConfig::effective_noise() const {
    if (!noise) return std::nullopt;
    noise::ErrorParams p = *noise;
    p.seed = seed;
    return p;
}

void merge_config_json(RunConfig& cfg, std::string_view json_text) {
    json doc = parse_object(json_text, "config");
    reject_unknown(doc, {"layer", "message", "variant", "format", "seed", "output_path", "spin_system", "noise"},
                   "config");

    std::string s;
    if (doc.contains("layer")) {
        read_field(doc, "layer", s);
        cfg.layer = parse_layer(s);
    }
    read_field(doc, "message", cfg.message);
    if (doc.contains("variant")) {
        read_field(doc, "variant", s);
        try {
            cfg.variant = parse_variant(s);
        } catch (const InvalidInput& e) {
            throw ConfigError(e.what());
        }
    }
    if (doc.contains("format")) {
        read_field(doc, "format", s);
        cfg.format = parse_format(s);
    }
    read_field(doc, "seed", cfg.seed);
    if (doc.contains("output_path")) {
        read_field(doc, "output_path", s);
        cfg.output_path = s;
    }

    if (doc.contains("spin_system")) {
        const json& ss = doc.at("spin_system");
        if (!ss.is_object()) throw ConfigError("'spin_system' must be an object");
        reject_unknown(ss, {"freq_a_mhz", "freq_b_mhz", "j_hz", "t2_a_s", "t2_b_s", "epsilon"}, "spin_system");
        nmr::SpinSystem& sys = cfg.spin_system;
        read_field(ss, "freq_a_mhz", sys.freq_a_mhz);
        read_field(ss, "freq_b_mhz", sys.freq_b_mhz);
        read_field(ss, "j_hz", sys.j_hz);
        read_field(ss, "t2_a_s", sys.t2_a_s);
        read_field(ss, "t2_b_s", sys.t2_b_s);
        read_field(ss, "epsilon", cfg.epsilon);
        sys.sync_polarization_ratio();
    }
    if (doc.contains("noise")) merge_noise_object(cfg, doc.at("noise"));
}

void merge_noise_json(RunConfig& cfg, std::string_view json_text) {
    json doc = parse_object(json_text, "noise config");
    merge_noise_object(cfg, doc.contains("noise") ? doc.at("noise") : doc);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("error reading '" + path + "'");
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace densecode
