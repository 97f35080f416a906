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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Reference values come from the test oracle,
// not from the library's own validator.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "densecode/densecode.h"
#include "densecode/experiment.hpp"
#include "densecode/nmrsim.hpp"
#include "densecode/noise.hpp"
#include "densecode/protocol.hpp"
#include "densecode/random.hpp"
#include "densecode/tomo.hpp"
#include "support.hpp"

namespace {

using namespace densecode;
using testing_support::to_oracle;

struct Verdict {
    bool pass;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

const double kS = 1.0 / std::sqrt(2.0);
const nmr::SpinSystem kSys;

Verdict bell_preparation() {
    double d = oracle::max_diff(to_oracle(prepare_bell(BellVariant::MinusPhi)), oracle::V4{kS, 0, 0, -kS});
    return {d <= 1e-12, "max amplitude error " + sci(d) + " (tol 1e-12)"};
}

Verdict encoding_lines() {
    const oracle::V4 lines[4] = {{kS, 0, 0, -kS}, {kS, 0, 0, kS}, {0, kS, -kS, 0}, {0, -kS, -kS, 0}};
    double worst = 0;
    PureState phi = prepare_bell(BellVariant::MinusPhi);
    for (int m = 1; m <= 4; ++m)
        worst = std::max(worst, oracle::max_diff(to_oracle(encode(phi, Message(m))), lines[m - 1]));
    return {worst <= 1e-12, "max amplitude error over 4 encodings " + sci(worst) + " (tol 1e-12)"};
}

Verdict table_oracle() {
    CorrespondenceTable t = table1();
    DenseCodingCircuit circuit;
    int matched = 0;
    double worst = 0;
    for (int i = 1; i <= 4; ++i) {
        for (BellVariant v : kAllVariants) {
            int vi = variant_index(v);
            oracle::V4 ref = oracle::protocol_output(i, vi);
            PureState got = circuit.decode(circuit.encode(circuit.prepare_bell(v), Message(i)));
            worst = std::max(worst, oracle::max_diff(to_oracle(got), ref));
            oracle::Basis b = oracle::basis_of(ref);
            if (t[i - 1][vi].basis() == b.index && t[i - 1][vi].phase == b.sign) ++matched;
        }
    }
    const char* printed[] = {"|10>", "|00>", "|11>", "-|01>"};
    bool column = true;
    for (int i = 0; i < 4; ++i) column = column && t[i][0].label() == printed[i];
    bool ok = matched == 16 && worst <= 1e-12 && column;
    return {ok, std::to_string(matched) + "/16 cells match the oracle, max amplitude error " + sci(worst) +
                    ", minus-phi column " + (column ? "matches" : "DIFFERS")};
}

Verdict capacity() {
    int bijective = 0;
    for (BellVariant v : kAllVariants) {
        std::set<int> outs;
        bool round_trip = true;
        for (int m = 1; m <= 4; ++m) {
            outs.insert(DenseCodingCircuit().run(Message(m), v).basis());
            round_trip = round_trip && transmit(Message(m), v) == Message(m);
        }
        if (outs.size() == 4 && round_trip) ++bijective;
    }
    return {bijective == 4, std::to_string(bijective) + "/4 variants map 4 messages onto 4 distinct outputs"};
}

Verdict pulse_layer() {
    double dist = oracle::phase_aligned_diff(to_oracle(nmr::compile(nmr::cnot_pulse_sequence(kSys), kSys).matrix()),
                                             oracle::cnot_ba());
    double worst = 1.0;
    for (int m = 1; m <= 4; ++m) {
        for (BellVariant v : kAllVariants) {
            int k = oracle::basis_of(oracle::protocol_output(m, variant_index(v))).index;
            Unitary4 u = nmr::compile(nmr::protocol_program(kSys, Message(m), v), kSys);
            worst = std::min(worst, probabilities(apply(u, PureState::basis(0)))[k]);
        }
    }
    bool ok = dist < 1e-9 && worst >= 1.0 - 1e-9;
    return {ok, "CNOT distance " + sci(dist) + " (tol 1e-9), min target population 1 - " + sci(1.0 - worst) +
                    " over 16 runs (tol 1e-9)"};
}

Verdict temporal_averaging() {
    double worst = 0;
    bool positive = true;
    for (double eps : {1e-6, 1e-5, 1e-4, 1e-3}) {
        Matrix4 rho = nmr::temporal_average(kSys, eps, nmr::PulseSequence{}).matrix();
        // rho = a I + b |00><00| means every excited diagonal equals a.
        Complex a = rho(1, 1);
        double b = (rho(0, 0) - a).real();
        positive = positive && b > 0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                Complex dev = (rho(r, c) - (r == c ? a : Complex(0))) / b;
                worst = std::max(worst, std::abs(dev - Complex(r == 0 && c == 0 ? 1.0 : 0.0)));
            }
    }
    return {positive && worst <= 1e-10, "normalized deviation vs |00><00| max error " + sci(worst) + " (tol 1e-10)"};
}

Verdict tomography() {
    Rng rng(20260101);
    double worst = 0;
    auto trip = [&](const DensityMatrix& rho) {
        DensityMatrix back = tomo::reconstruct(tomo::simulate_readouts(rho));
        worst = std::max(worst, oracle::max_diff(to_oracle(back.matrix()), to_oracle(rho.matrix())));
    };
    for (int n = 0; n < 100; ++n) trip(random_density_matrix(rng, 1 + n % 4));
    for (int m = 1; m <= 4; ++m) {
        int k = oracle::basis_of(oracle::protocol_output(m, 0)).index;
        trip(DensityMatrix::from_pure(PureState::basis(k)));
    }
    return {worst <= 1e-8, "104 round trips, max element error " + sci(worst) + " (tol 1e-8)"};
}

Verdict error_scale() {
    auto start = std::chrono::steady_clock::now();
    auto panels = run_all_panels(kSys, noise::demo_error_params());
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double e = max_relative_error(panels);
    char buf[128];
    std::snprintf(buf, sizeof buf, "max relative element error %.4f (band [0.05, 0.15]), %.2f s at ensemble %d", e,
                  secs, noise::demo_error_params().ensemble_size);
    return {e >= 0.05 && e <= 0.15 && secs < 30.0, buf};
}

Verdict determinism() {
    auto once = [](std::string& out) {
        dc_config* cfg = nullptr;
        if (dc_config_new(&cfg) != DC_OK) return false;
        char* text = nullptr;
        int code = -1;
        bool ok = dc_run_command(cfg, DC_CMD_VALIDATE, &text, &code) == DC_OK && code == 0;
        if (text) out = text;
        dc_string_free(text);
        dc_config_free(cfg);
        return ok;
    };
    std::string a, b;
    bool ran = once(a) && once(b);
    bool same = ran && a == b && !a.empty();
    return {same, std::string("validate report ") + (same ? "byte-identical" : "DIFFERS") + " across two runs (" +
                      std::to_string(a.size()) + " bytes)"};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const Criterion criteria[] = {
        {"bell-preparation", bell_preparation}, {"encoding", encoding_lines},
        {"table-oracle", table_oracle},         {"capacity", capacity},
        {"pulse-layer", pulse_layer},           {"temporal-averaging", temporal_averaging},
        {"tomography-round-trip", tomography},  {"error-scale", error_scale},
        {"determinism", determinism},
    };
    int failed = 0, id = 0;
    for (const auto& c : criteria) {
        ++id;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        failed += !v.pass;
        std::printf("[%s] criterion %d %s: %s\n", v.pass ? "PASS" : "FAIL", id, c.name, v.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", id - failed, id);
    return failed == 0 ? 0 : 1;
}
