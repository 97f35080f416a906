/*
 * Copyright 2026 The densecode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef DENSECODE_DENSECODE_H_
#define DENSECODE_DENSECODE_H_

/*
 * C interface to libdensecode.
 *
 * Every fallible call returns a dc_status. On failure the message is
 * available from dc_last_error() on the same thread until the next call.
 * Strings returned through char** out-parameters are owned by the caller
 * and must be released with dc_string_free().
 *
 * Density matrices are 4x4 in the basis |00>, |01>, |10>, |11> (13C spin
 * first), passed as row-major real and imaginary arrays of 16 doubles.
 */

#include <stdint.h>

#if defined(_WIN32)
#define DC_API __declspec(dllexport)
#else
#define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
    DC_OK = 0,
    DC_ERR_INVALID_INPUT = 1,
    DC_ERR_NOT_BASIS_STATE = 2,
    DC_ERR_RANK_DEFICIENT = 3,
    DC_ERR_CONFIG = 4,
    DC_ERR_IO = 5,
    DC_ERR_INTERNAL = 6
} dc_status;

typedef enum dc_command {
    DC_CMD_TABLE = 0,
    DC_CMD_RUN = 1,
    DC_CMD_FIG4 = 2,
    DC_CMD_TOMO = 3,
    DC_CMD_VALIDATE = 4
} dc_command;

typedef struct dc_config dc_config;
typedef struct dc_density dc_density;

DC_API const char* dc_version(void);
DC_API const char* dc_last_error(void);
DC_API void dc_string_free(char* s);

/* Run configuration. Defaults: ideal layer, message 1, minus-phi, text. */
DC_API dc_status dc_config_new(dc_config** out);
DC_API void dc_config_free(dc_config* cfg);
DC_API dc_status dc_config_set_message(dc_config* cfg, int message);
/* "minus-phi", "plus-phi", "minus-psi" or "plus-psi". */
DC_API dc_status dc_config_set_variant(dc_config* cfg, const char* variant);
/* "ideal" or "pulse". */
DC_API dc_status dc_config_set_layer(dc_config* cfg, const char* layer);
/* "text", "json" or "csv". */
DC_API dc_status dc_config_set_format(dc_config* cfg, const char* format);
DC_API dc_status dc_config_set_seed(dc_config* cfg, uint64_t seed);
/* NULL clears the path. */
DC_API dc_status dc_config_set_output_path(dc_config* cfg, const char* path);
/* Current layer name; the string is static. */
DC_API dc_status dc_config_get_layer(const dc_config* cfg, const char** layer);
DC_API dc_status dc_config_load_json(dc_config* cfg, const char* json_text);
DC_API dc_status dc_config_load_file(dc_config* cfg, const char* path);
/* Accepts either a bare noise object or a document with a "noise" key. */
DC_API dc_status dc_config_load_noise_file(dc_config* cfg, const char* path);

/*
 * Runs a CLI command. On DC_OK, *output holds the text to print and
 * *exit_code the process exit code (0 success, 1 validation failure).
 */
DC_API dc_status dc_run_command(const dc_config* cfg, dc_command cmd, char** output, int* exit_code);

/* Ideal-circuit round trip: message in 1..4, received message out. */
DC_API dc_status dc_transmit(int message, const char* variant, int* received);
/* Output |y x> with sign phase for encoding 1..4 applied to a variant. */
DC_API dc_status dc_table_cell(int encoding, const char* variant, int* y, int* x, int* phase);

DC_API dc_status dc_density_new(const double re[16], const double im[16], dc_density** out);
DC_API void dc_density_free(dc_density* rho);
DC_API dc_status dc_density_get(const dc_density* rho, double re[16], double im[16]);
DC_API dc_status dc_density_fidelity(const dc_density* rho, const dc_density* sigma, double* out);
/* Element moduli |rho_rc|, row-major. */
DC_API dc_status dc_density_modulus(const dc_density* rho, double out[16]);
/* Simulates the nine readout experiments on rho and reconstructs it. */
DC_API dc_status dc_tomography_roundtrip(const dc_density* rho, dc_density** out);

#ifdef __cplusplus
}
#endif

#endif /* DENSECODE_DENSECODE_H_ */
