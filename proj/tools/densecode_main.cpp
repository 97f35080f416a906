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

// densecode command-line tool. Links only the C API.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "densecode/densecode.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Options {
    std::optional<int> message;
    std::optional<std::string> variant;
    std::optional<std::string> layer;
    std::optional<std::string> config_path;
    std::optional<std::string> noise_path;
    std::optional<unsigned long long> seed;
    std::optional<std::string> format;
    std::optional<std::string> out;
};

int status_exit(dc_status s) {
    if (*dc_last_error()) std::fprintf(stderr, "densecode: error: %s\n", dc_last_error());
    return s == DC_ERR_IO ? kExitIo : s == DC_ERR_CONFIG || s == DC_ERR_INVALID_INPUT ? kExitUsage : 1;
}

class ConfigHandle {
   public:
    ConfigHandle() { dc_config_new(&cfg_); }
    ~ConfigHandle() { dc_config_free(cfg_); }
    ConfigHandle(const ConfigHandle&) = delete;
    ConfigHandle& operator=(const ConfigHandle&) = delete;
    dc_config* get() const { return cfg_; }

   private:
    dc_config* cfg_ = nullptr;
};

// Applies the config file, then any flags given on the command line.
dc_status build_config(const Options& o, dc_config* cfg) {
    dc_status s = DC_OK;
    auto step = [&](dc_status r) {
        if (s == DC_OK) s = r;
    };
    if (o.config_path) step(dc_config_load_file(cfg, o.config_path->c_str()));
    if (o.message) step(dc_config_set_message(cfg, *o.message));
    if (o.variant) step(dc_config_set_variant(cfg, o.variant->c_str()));
    if (o.layer) step(dc_config_set_layer(cfg, o.layer->c_str()));
    if (o.format) step(dc_config_set_format(cfg, o.format->c_str()));
    if (o.out) step(dc_config_set_output_path(cfg, o.out->c_str()));
    if (o.noise_path && s == DC_OK) {
        // Reject the layer conflict before touching the file.
        const char* layer = nullptr;
        step(dc_config_get_layer(cfg, &layer));
        if (s == DC_OK && std::string(layer) != "pulse") {
            std::fprintf(stderr, "densecode: error: --noise requires --layer pulse\n");
            return DC_ERR_CONFIG;
        }
        step(dc_config_load_noise_file(cfg, o.noise_path->c_str()));
    }
    if (o.seed) step(dc_config_set_seed(cfg, static_cast<uint64_t>(*o.seed)));
    return s;
}

int dispatch(const Options& o, dc_command cmd) {
    ConfigHandle cfg;
    if (!cfg.get()) return status_exit(DC_ERR_INTERNAL);
    if (dc_status s = build_config(o, cfg.get()); s != DC_OK) return status_exit(s);
    char* output = nullptr;
    int code = 0;
    if (dc_status s = dc_run_command(cfg.get(), cmd, &output, &code); s != DC_OK) return status_exit(s);
    std::fputs(output, stdout);
    dc_string_free(output);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dense coding on a simulated two-spin NMR register"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool protocol_flags) {
        if (protocol_flags) {
            sub->add_option("-m,--message", o.message, "Message 1..4 (bits 00, 01, 10, 11)")->check(CLI::Range(1, 4));
            sub->add_option("-v,--variant", o.variant, "Shared Bell state: minus-phi, plus-phi, minus-psi, plus-psi");
            sub->add_option("--layer", o.layer, "ideal or pulse");
            sub->add_option("--noise", o.noise_path, "JSON file with noise parameters (pulse layer only)");
        }
        sub->add_option("--config", o.config_path, "JSON config file");
        sub->add_option("--seed", o.seed, "RNG seed for noisy simulation");
        sub->add_option("--format", o.format, "text, json or csv");
        sub->add_option("--out", o.out, "Also write the output to PATH");
    };

    struct Cmd {
        const char* name;
        const char* help;
        dc_command id;
        bool protocol_flags;
    };
    const Cmd cmds[] = {
        {"table", "Print the encoding/start-state correspondence table", DC_CMD_TABLE, false},
        {"run", "Run the protocol once", DC_CMD_RUN, true},
        {"fig4", "Export theoretical and simulated density-matrix moduli", DC_CMD_FIG4, true},
        {"tomo", "Simulate readouts and reconstruct the output state", DC_CMD_TOMO, true},
        {"validate", "Run the acceptance checks", DC_CMD_VALIDATE, false},
    };
    std::optional<dc_command> chosen;
    for (const Cmd& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common(sub, c.protocol_flags);
        sub->callback([&chosen, id = c.id] { chosen = id; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    return dispatch(o, *chosen);
}
