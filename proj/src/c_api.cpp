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

#include "densecode/densecode.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "densecode/commands.hpp"
#include "densecode/config.hpp"
#include "densecode/error.hpp"
#include "densecode/protocol.hpp"
#include "densecode/tomo.hpp"

struct dc_config {
    densecode::RunConfig cfg;
};

struct dc_density {
    densecode::DensityMatrix rho;
};

namespace {

thread_local std::string g_last_error;

dc_status fail(dc_status s, const char* msg) {
    g_last_error = msg;
    return s;
}

template <typename F>
dc_status guarded(F&& body) {
    g_last_error.clear();
    try {
        body();
        return DC_OK;
    } catch (const densecode::ConfigError& e) {
        return fail(DC_ERR_CONFIG, e.what());
    } catch (const densecode::IoError& e) {
        return fail(DC_ERR_IO, e.what());
    } catch (const densecode::NotBasisState& e) {
        return fail(DC_ERR_NOT_BASIS_STATE, e.what());
    } catch (const densecode::RankDeficient& e) {
        return fail(DC_ERR_RANK_DEFICIENT, e.what());
    } catch (const densecode::InvalidInput& e) {
        return fail(DC_ERR_INVALID_INPUT, e.what());
    } catch (const std::exception& e) {
        return fail(DC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(DC_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what) {
    if (!p) throw densecode::InvalidInput(std::string(what) + " must not be null");
}

densecode::BellVariant variant_arg(const char* name) {
    require(name, "variant");
    return densecode::parse_variant(name);
}

}  // namespace

extern "C" {

const char* dc_version(void) { return "1.0.0"; }

const char* dc_last_error(void) { return g_last_error.c_str(); }

void dc_string_free(char* s) { std::free(s); }

dc_status dc_config_new(dc_config** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dc_config();
    });
}

void dc_config_free(dc_config* cfg) { delete cfg; }

dc_status dc_config_set_message(dc_config* cfg, int message) {
    return guarded([&] {
        require(cfg, "cfg");
        if (message < 1 || message > 4) throw densecode::ConfigError("message must be in 1..4");
        cfg->cfg.message = message;
    });
}

dc_status dc_config_set_variant(dc_config* cfg, const char* variant) {
    return guarded([&] {
        require(cfg, "cfg");
        try {
            cfg->cfg.variant = variant_arg(variant);
        } catch (const densecode::InvalidInput& e) {
            throw densecode::ConfigError(e.what());
        }
    });
}

dc_status dc_config_set_layer(dc_config* cfg, const char* layer) {
    return guarded([&] {
        require(cfg, "cfg");
        require(layer, "layer");
        cfg->cfg.layer = densecode::parse_layer(layer);
    });
}

dc_status dc_config_set_format(dc_config* cfg, const char* format) {
    return guarded([&] {
        require(cfg, "cfg");
        require(format, "format");
        cfg->cfg.format = densecode::parse_format(format);
    });
}

dc_status dc_config_set_seed(dc_config* cfg, uint64_t seed) {
    return guarded([&] {
        require(cfg, "cfg");
        cfg->cfg.seed = seed;
    });
}

dc_status dc_config_set_output_path(dc_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg, "cfg");
        if (path)
            cfg->cfg.output_path = path;
        else
            cfg->cfg.output_path.reset();
    });
}

dc_status dc_config_get_layer(const dc_config* cfg, const char** layer) {
    return guarded([&] {
        require(cfg, "cfg");
        require(layer, "layer");
        *layer = cfg->cfg.layer == densecode::Layer::Pulse ? "pulse" : "ideal";
    });
}

dc_status dc_config_load_json(dc_config* cfg, const char* json_text) {
    return guarded([&] {
        require(cfg, "cfg");
        require(json_text, "json_text");
        densecode::merge_config_json(cfg->cfg, json_text);
    });
}

dc_status dc_config_load_file(dc_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg, "cfg");
        require(path, "path");
        densecode::merge_config_json(cfg->cfg, densecode::read_text_file(path));
    });
}

dc_status dc_config_load_noise_file(dc_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg, "cfg");
        require(path, "path");
        densecode::merge_noise_json(cfg->cfg, densecode::read_text_file(path));
    });
}

dc_status dc_run_command(const dc_config* cfg, dc_command cmd, char** output, int* exit_code) {
    return guarded([&] {
        require(cfg, "cfg");
        require(output, "output");
        require(exit_code, "exit_code");
        namespace c = densecode::commands;
        c::CommandResult r;
        switch (cmd) {
            case DC_CMD_TABLE: r = c::table(cfg->cfg); break;
            case DC_CMD_RUN: r = c::run(cfg->cfg); break;
            case DC_CMD_FIG4: r = c::fig4(cfg->cfg); break;
            case DC_CMD_TOMO: r = c::tomo(cfg->cfg); break;
            case DC_CMD_VALIDATE: r = c::validate(cfg->cfg); break;
            default: throw densecode::InvalidInput("unknown command");
        }
        *output = copy_string(r.output);
        *exit_code = r.exit_code;
    });
}

dc_status dc_transmit(int message, const char* variant, int* received) {
    return guarded([&] {
        require(received, "received");
        *received = densecode::transmit(densecode::Message(message), variant_arg(variant)).index();
    });
}

dc_status dc_table_cell(int encoding, const char* variant, int* y, int* x, int* phase) {
    return guarded([&] {
        require(y, "y");
        require(x, "x");
        require(phase, "phase");
        if (encoding < 1 || encoding > 4) throw densecode::InvalidInput("encoding must be in 1..4");
        auto v = densecode::variant_index(variant_arg(variant));
        const densecode::DecodedOutput& o = densecode::table1()[encoding - 1][v];
        *y = o.y;
        *x = o.x;
        *phase = o.phase;
    });
}

dc_status dc_density_new(const double re[16], const double im[16], dc_density** out) {
    return guarded([&] {
        require(re, "re");
        require(im, "im");
        require(out, "out");
        densecode::Matrix4 m;
        for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = densecode::Complex(re[k], im[k]);
        *out = new dc_density{densecode::DensityMatrix(m)};
    });
}

void dc_density_free(dc_density* rho) { delete rho; }

dc_status dc_density_get(const dc_density* rho, double re[16], double im[16]) {
    return guarded([&] {
        require(rho, "rho");
        require(re, "re");
        require(im, "im");
        for (int k = 0; k < 16; ++k) {
            re[k] = rho->rho(k / 4, k % 4).real();
            im[k] = rho->rho(k / 4, k % 4).imag();
        }
    });
}

dc_status dc_density_fidelity(const dc_density* rho, const dc_density* sigma, double* out) {
    return guarded([&] {
        require(rho, "rho");
        require(sigma, "sigma");
        require(out, "out");
        *out = densecode::fidelity(rho->rho, sigma->rho);
    });
}

dc_status dc_density_modulus(const dc_density* rho, double out[16]) {
    return guarded([&] {
        require(rho, "rho");
        require(out, "out");
        densecode::tomo::ModulusTable t = densecode::tomo::element_modulus_table(rho->rho);
        for (int k = 0; k < 16; ++k) out[k] = t(k / 4, k % 4);
    });
}

dc_status dc_tomography_roundtrip(const dc_density* rho, dc_density** out) {
    return guarded([&] {
        require(rho, "rho");
        require(out, "out");
        auto records = densecode::tomo::simulate_readouts(rho->rho);
        *out = new dc_density{densecode::tomo::reconstruct(records)};
    });
}

}  // extern "C"
