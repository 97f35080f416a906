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

#include "densecode/validate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>

#include "densecode/experiment.hpp"
#include "densecode/random.hpp"
#include "densecode/tomo.hpp"

namespace densecode::validation {

namespace {

// ---- Independent brute-force arithmetic ---------------------------------

using C = std::complex<double>;
using M2 = std::array<std::array<C, 2>, 2>;
using M4 = std::array<std::array<C, 4>, 4>;
using V4 = std::array<C, 4>;

const double kR = 1.0 / std::sqrt(2.0);
const M2 kI2{{{1, 0}, {0, 1}}};
const M2 kX2{{{0, 1}, {1, 0}}};
const M2 kZ2{{{1, 0}, {0, -1}}};
const M2 kIY2{{{0, 1}, {-1, 0}}};
const M2 kH2{{{kR, kR}, {kR, -kR}}};
const M4 kCnot{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}};

M4 kron(const M2& b, const M2& a) {
    M4 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out[2 * i + j][2 * k + l] = b[i][k] * a[j][l];
    return out;
}

V4 mul(const M4& m, const V4& v) {
    V4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r] += m[r][c] * v[c];
    return out;
}

DecodedOutput to_output(const V4& v) {
    int k = 0;
    for (int j = 1; j < 4; ++j)
        if (std::abs(v[j]) > std::abs(v[k])) k = j;
    return DecodedOutput{k >> 1, k & 1, v[k].real() < 0 ? -1 : 1};
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double state_distance(const PureState& s, const Vector4& expected) { return (s.amplitudes() - expected).cwiseAbs().maxCoeff(); }

template <typename F>
CheckResult guarded(int id, std::string name, F&& body) {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    try {
        std::tie(r.passed, r.detail) = body();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

// Check bodies return {passed, detail}.
using Outcome = std::pair<bool, std::string>;

Outcome check_eq1(const DenseCodingCircuit& circuit) {
    Vector4 expected(kR, 0, 0, -kR);
    double d = state_distance(circuit.prepare_bell(BellVariant::MinusPhi), expected);
    return {d <= 1e-12, "max |amp - (1,0,0,-1)/sqrt2| = " + fmt("%.3e", d) + " (tol 1e-12)"};
}

Outcome check_eq2(const DenseCodingCircuit& circuit) {
    const std::array<Vector4, 4> expected{Vector4(kR, 0, 0, -kR), Vector4(kR, 0, 0, kR), Vector4(0, kR, -kR, 0),
                                          Vector4(0, -kR, -kR, 0)};
    PureState bell = circuit.prepare_bell(BellVariant::MinusPhi);
    double worst = 0.0;
    for (int i = 1; i <= 4; ++i)
        worst = std::max(worst, state_distance(circuit.encode(bell, Message(i)), expected[i - 1]));
    return {worst <= 1e-12, "max deviation over the four encoded states = " + fmt("%.3e", worst) + " (tol 1e-12)"};
}

Outcome check_capacity(const DenseCodingCircuit& circuit) {
    int round_trips = 0;
    for (BellVariant v : kAllVariants) {
        std::set<int> outputs;
        for (int i = 1; i <= 4; ++i) {
            outputs.insert(circuit.run(Message(i), v).basis());
            if (circuit.transmit(Message(i), v) == Message(i)) ++round_trips;
        }
        if (outputs.size() != 4)
            return {false, std::string("variant ") + std::string(to_string(v)) + " maps messages onto only " +
                               std::to_string(outputs.size()) + " outputs"};
    }
    return {round_trips == 16, "4 distinct outputs per variant (2 bits); " + std::to_string(round_trips) +
                                   "/16 messages recovered"};
}

Outcome check_pulse_layer(const nmr::SpinSystem& sys) {
    double cnot_dist = phase_aligned_distance(nmr::compile(nmr::cnot_pulse_sequence(sys), sys).matrix(),
                                              cnot_ba().matrix());
    CorrespondenceTable expected = brute_force_table();
    double worst_pop = 1.0;
    for (int i = 1; i <= 4; ++i) {
        for (BellVariant v : kAllVariants) {
            Unitary4 u = nmr::compile(nmr::protocol_program(sys, Message(i), v), sys);
            PureState out = apply(u, PureState::basis(0));
            int k = expected[i - 1][variant_index(v)].basis();
            worst_pop = std::min(worst_pop, probabilities(out)[k]);
        }
    }
    bool ok = cnot_dist < 1e-9 && worst_pop >= 1.0 - 1e-9;
    return {ok, "CNOT phase-aligned distance = " + fmt("%.3e", cnot_dist) +
                    " (tol 1e-9); min population on expected output = 1 - " + fmt("%.3e", 1.0 - worst_pop) +
                    " (tol 1e-9)"};
}

Outcome check_temporal_average(const nmr::SpinSystem& sys) {
    double worst = 0.0;
    bool positive = true;
    for (double eps : {1e-5, 1e-3}) {
        DensityMatrix avg = nmr::temporal_average(sys, eps, nmr::PulseSequence{});
        nmr::PseudoPureFit fit = nmr::fit_pseudo_pure(avg, 0);
        positive = positive && fit.beta > 0.0;
        Matrix4 dev = nmr::normalized_deviation(avg, 0);
        Matrix4 target = Matrix4::Zero();
        target(0, 0) = 1.0;
        worst = std::max(worst, max_abs(Matrix4(dev - target)));
    }
    return {positive && worst <= 1e-10,
            "normalized deviation vs |00><00|, max elementwise error = " + fmt("%.3e", worst) + " (tol 1e-10)"};
}

Outcome check_tomography(std::uint64_t seed) {
    Rng rng(seed);
    double worst = 0.0;
    auto round_trip = [&](const DensityMatrix& rho) {
        DensityMatrix back = tomo::reconstruct(tomo::simulate_readouts(rho));
        worst = std::max(worst, max_abs(Matrix4(back.matrix() - rho.matrix())));
    };
    for (int n = 0; n < 100; ++n) round_trip(random_density_matrix(rng, 1 + n % 4));
    CorrespondenceTable t = brute_force_table();
    for (int i = 0; i < 4; ++i) round_trip(DensityMatrix::from_pure(PureState::basis(t[i][0].basis())));
    return {worst <= 1e-8,
            "100 random states + 4 protocol outputs, max elementwise error = " + fmt("%.3e", worst) + " (tol 1e-8)"};
}

noise::ErrorParams demo_params(const ValidationOptions& opts) {
    noise::ErrorParams p = noise::demo_error_params();
    p.ensemble_size = opts.ensemble_size;
    p.seed = opts.seed;
    return p;
}

std::string panel_fingerprint(const std::array<ExperimentPanel, 4>& panels) {
    std::string s;
    for (const auto& p : panels) s += p.experiment_table.to_csv();
    return s;
}

Outcome check_error_scale(const ValidationOptions& opts) {
    auto panels = run_all_panels(opts.spin_system, demo_params(opts));
    double e = max_relative_error(panels);
    return {e >= 0.05 && e <= 0.15, "max relative element error over 4 panels = " + fmt("%.4f", e) +
                                         " (band [0.05, 0.15], ensemble " + std::to_string(opts.ensemble_size) + ")"};
}

Outcome check_determinism(const ValidationOptions& opts) {
    noise::ErrorParams p = demo_params(opts);
    std::string first = panel_fingerprint(run_all_panels(opts.spin_system, p));
    std::string second = panel_fingerprint(run_all_panels(opts.spin_system, p));

    nmr::PulseSequence prog = nmr::protocol_program(opts.spin_system, Message(4), BellVariant::MinusPhi);
    Matrix4 serial = noise::ensemble_average(prog, opts.spin_system, p, DensityMatrix(), 1).matrix();
    Matrix4 parallel = noise::ensemble_average(prog, opts.spin_system, p, DensityMatrix(), 4).matrix();
    bool threads_match = std::equal(serial.data(), serial.data() + 16, parallel.data());
    bool ok = first == second && threads_match;
    return {ok, std::string("repeat run ") + (first == second ? "byte-identical" : "DIFFERS") + "; 1 vs 4 threads " +
                    (threads_match ? "bit-identical" : "DIFFER")};
}

}  // namespace

CorrespondenceTable brute_force_table() {
    const std::array<M4, 4> flips{kron(kX2, kI2), kron(kI2, kI2), kron(kX2, kX2), kron(kI2, kX2)};
    const std::array<M2, 4> enc{kI2, kZ2, kX2, kIY2};
    const M4 had_b = kron(kH2, kI2);
    CorrespondenceTable t{};
    for (int i = 0; i < 4; ++i) {
        for (int v = 0; v < 4; ++v) {
            V4 s{1, 0, 0, 0};
            s = mul(flips[v], s);
            s = mul(had_b, s);
            s = mul(kCnot, s);
            s = mul(kron(kI2, enc[i]), s);
            s = mul(kCnot, s);
            s = mul(had_b, s);
            t[i][v] = to_output(s);
        }
    }
    return t;
}

CheckResult check_table(const CorrespondenceTable& table) {
    return guarded(3, "table-oracle", [&]() -> Outcome {
        CorrespondenceTable oracle = brute_force_table();
        int mismatches = 0;
        std::string first;
        for (int i = 0; i < 4; ++i) {
            for (int v = 0; v < 4; ++v) {
                if (table[i][v] == oracle[i][v]) continue;
                if (mismatches++ == 0)
                    first = "; first mismatch U_a" + std::to_string(i + 1) + "/" +
                            std::string(to_string(kAllVariants[v])) + ": " + table[i][v].label() + " vs " +
                            oracle[i][v].label();
            }
        }
        const std::array<DecodedOutput, 4> printed{DecodedOutput{1, 0, 1}, DecodedOutput{0, 0, 1},
                                                   DecodedOutput{1, 1, 1}, DecodedOutput{0, 1, -1}};
        int column_mismatch = 0;
        for (int i = 0; i < 4; ++i)
            if (!(table[i][0] == printed[i])) ++column_mismatch;
        bool ok = mismatches == 0 && column_mismatch == 0;
        return {ok, std::to_string(16 - mismatches) + "/16 cells match brute force; minus-phi column " +
                        (column_mismatch == 0 ? "matches |10>, |00>, |11>, -|01>" : "DIFFERS from |10>, |00>, |11>, -|01>") +
                        first};
    });
}

std::vector<CheckResult> run_all(const ValidationOptions& opts) {
    DenseCodingCircuit circuit(opts.gates);
    const nmr::SpinSystem& sys = opts.spin_system;
    std::vector<CheckResult> out;
    out.push_back(guarded(1, "bell-preparation", [&] { return check_eq1(circuit); }));
    out.push_back(guarded(2, "encoding", [&] { return check_eq2(circuit); }));
    {
        CheckResult r;
        try {
            r = check_table(circuit.table());
        } catch (const std::exception& e) {
            r = CheckResult{3, "table-oracle", false, std::string("exception: ") + e.what()};
        }
        out.push_back(r);
    }
    out.push_back(guarded(4, "capacity", [&] { return check_capacity(circuit); }));
    out.push_back(guarded(5, "pulse-layer", [&] { return check_pulse_layer(sys); }));
    out.push_back(guarded(6, "temporal-averaging", [&] { return check_temporal_average(sys); }));
    out.push_back(guarded(7, "tomography-round-trip", [&] { return check_tomography(opts.seed); }));
    out.push_back(guarded(8, "error-scale", [&] { return check_error_scale(opts); }));
    out.push_back(guarded(9, "determinism", [&] { return check_determinism(opts); }));
    return out;
}

std::string render_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
        if (r.passed) ++passed;
    }
    os << passed << '/' << results.size() << " checks passed\n";
    return os.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace densecode::validation
