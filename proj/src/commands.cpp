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

#include "densecode/commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "densecode/experiment.hpp"
#include "densecode/nmrsim.hpp"
#include "densecode/tomo.hpp"
#include "densecode/validate.hpp"

namespace densecode::commands {

using nlohmann::ordered_json;

namespace {

constexpr std::array<const char*, 4> kEncodingNames{"I", "sigma_z", "sigma_x", "i*sigma_y"};
constexpr std::array<const char*, 4> kBasisKets{"|00>", "|01>", "|10>", "|11>"};

double clean(double v) { return std::abs(v) < 1e-15 ? 0.0 : v; }

std::string num(double v, int digits = 10) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, clean(v));
    return buf;
}

std::string complex_str(Complex z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f%+.8fi", clean(z.real()), clean(z.imag()));
    return buf;
}

std::string ket_str(const PureState& s) {
    std::string out;
    for (int k = 0; k < 4; ++k) {
        if (std::abs(s[k]) < 1e-12) continue;
        if (!out.empty()) out += " + ";
        out += "(" + complex_str(s[k]) + ")" + kBasisKets[k];
    }
    return out;
}

ordered_json state_json(const PureState& s) {
    ordered_json arr = ordered_json::array();
    for (int k = 0; k < 4; ++k) arr.push_back({clean(s[k].real()), clean(s[k].imag())});
    return arr;
}

ordered_json matrix_json(const Matrix4& m) {
    ordered_json re = ordered_json::array(), im = ordered_json::array();
    for (int r = 0; r < 4; ++r) {
        ordered_json rr = ordered_json::array(), ii = ordered_json::array();
        for (int c = 0; c < 4; ++c) {
            rr.push_back(clean(m(r, c).real()));
            ii.push_back(clean(m(r, c).imag()));
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    return {{"re", re}, {"im", im}};
}

std::string matrix_text(const Matrix4& m) {
    std::string out;
    for (int r = 0; r < 4; ++r) {
        out += "  ";
        for (int c = 0; c < 4; ++c) out += (c ? "  " : "") + complex_str(m(r, c));
        out += '\n';
    }
    return out;
}

std::string modulus_text(const tomo::ModulusTable& t) {
    std::string out = "         |00>      |01>      |10>      |11>\n";
    for (int r = 0; r < 4; ++r) {
        out += std::string("  ") + kBasisKets[r];
        for (int c = 0; c < 4; ++c) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "  %8.5f", t(r, c));
            out += buf;
        }
        out += '\n';
    }
    return out;
}

ordered_json output_json(const DecodedOutput& o) {
    return {{"y", o.y}, {"x", o.x}, {"phase", o.phase}, {"label", o.label()}};
}

ordered_json noise_json(const noise::ErrorParams& p) {
    auto t2 = [](double v) { return std::isinf(v) ? ordered_json(nullptr) : ordered_json(v); };
    return {{"rf_spread", p.rf_spread},         {"calib_offset", p.calib_offset},
            {"offset_spread_hz", p.offset_spread_hz}, {"t2_a_s", t2(p.t2_a_s)},
            {"t2_b_s", t2(p.t2_b_s)},           {"ensemble_size", p.ensemble_size},
            {"seed", p.seed}};
}

std::string key_values_csv(const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string out = "key,value\n";
    for (const auto& [k, v] : kv) out += k + "," + v + "\n";
    return out;
}

void maybe_write(const RunConfig& cfg, const std::string& content) {
    if (cfg.output_path) write_text_file(*cfg.output_path, content);
}

// The basis state holding at least 1 - kReadoutTol of the population, or -1.
int dominant_basis(const std::array<double, 4>& p) {
    for (int k = 0; k < 4; ++k)
        if (p[k] >= 1.0 - kReadoutTol) return k;
    return -1;
}

int argmax(const std::array<double, 4>& p) { return static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin()); }

}  // namespace

std::string render_table(const CorrespondenceTable& t, OutputFormat format) {
    switch (format) {
        case OutputFormat::Json: {
            ordered_json cols = ordered_json::array();
            for (BellVariant v : kAllVariants) cols.push_back(std::string(to_string(v)));
            ordered_json rows = ordered_json::array();
            for (int i = 0; i < 4; ++i) {
                ordered_json cells = ordered_json::array();
                for (int v = 0; v < 4; ++v) cells.push_back(output_json(t[i][v]));
                rows.push_back({{"encoding", "U_a" + std::to_string(i + 1)}, {"unitary", kEncodingNames[i]},
                                {"cells", cells}});
            }
            return ordered_json{{"columns", cols}, {"rows", rows}}.dump(2) + "\n";
        }
        case OutputFormat::Csv: {
            std::string out = "encoding,variant,y,x,phase,label\n";
            for (int i = 0; i < 4; ++i)
                for (int v = 0; v < 4; ++v)
                    out += "U_a" + std::to_string(i + 1) + "," + std::string(to_string(kAllVariants[v])) + "," +
                           std::to_string(t[i][v].y) + "," + std::to_string(t[i][v].x) + "," +
                           std::to_string(t[i][v].phase) + "," + t[i][v].label() + "\n";
            return out;
        }
        case OutputFormat::Text: break;
    }
    std::string out = "start state ->   minus-phi  plus-phi   minus-psi  plus-psi\n";
    for (int i = 0; i < 4; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "U_a%d %-11s", i + 1, kEncodingNames[i]);
        out += buf;
        for (int v = 0; v < 4; ++v) {
            std::snprintf(buf, sizeof buf, "  %-9s", t[i][v].label().c_str());
            out += buf;
        }
        out += '\n';
    }
    return out;
}

CommandResult table(const RunConfig& cfg) {
    CorrespondenceTable t = table1();
    validation::CheckResult check = validation::check_table(t);
    CommandResult res;
    res.exit_code = check.passed ? kOk : kValidationFailed;
    if (cfg.format == OutputFormat::Json) {
        ordered_json doc = ordered_json::parse(render_table(t, OutputFormat::Json));
        doc["self_check"] = {{"passed", check.passed}, {"detail", check.detail}};
        res.output = doc.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        res.output = render_table(t, OutputFormat::Csv);
    } else {
        res.output = render_table(t, OutputFormat::Text) + "self-check: " + (check.passed ? "PASS" : "FAIL") + " (" +
                     check.detail + ")\n";
    }
    maybe_write(cfg, res.output);
    return res;
}

CommandResult run(const RunConfig& cfg) {
    cfg.validate();
    const Message m(cfg.message);
    const BellVariant v = cfg.variant;
    const DenseCodingCircuit circuit;
    const DecodedOutput ideal_out = circuit.run(m, v);

    std::vector<std::pair<std::string, std::string>> kv{{"layer", std::string(to_string(cfg.layer))},
                                                        {"message", std::to_string(m.index())},
                                                        {"bits", m.bits()},
                                                        {"variant", std::string(to_string(v))}};
    ordered_json doc{{"layer", to_string(cfg.layer)}, {"message", m.index()}, {"bits", m.bits()},
                     {"variant", to_string(v)}};
    std::ostringstream text;
    text << "layer:    " << to_string(cfg.layer) << "\nmessage:  " << m.index() << " (bits " << m.bits()
         << ")\nvariant:  " << to_string(v) << '\n';

    int recovered = 0;
    if (cfg.layer == Layer::Ideal) {
        PureState prepared = circuit.prepare_bell(v);
        PureState encoded = circuit.encode(prepared, m);
        PureState decoded = circuit.decode(encoded);
        DecodedOutput out = DenseCodingCircuit::readout(decoded);
        recovered = invert_column(circuit.table(), v, out.y, out.x).index();

        text << "prepared: " << ket_str(prepared) << "\nencoded:  " << ket_str(encoded) << "\ndecoded:  "
             << ket_str(decoded) << "\nreadout:  y=" << out.y << " x=" << out.x
             << " phase=" << (out.phase < 0 ? '-' : '+') << "  " << out.label() << '\n';
        doc["prepared"] = state_json(prepared);
        doc["encoded"] = state_json(encoded);
        doc["decoded"] = state_json(decoded);
        doc["readout"] = output_json(out);
        kv.push_back({"readout", out.label()});
    } else {
        const nmr::SpinSystem& sys = cfg.spin_system;
        nmr::PulseSequence program = nmr::protocol_program(sys, m, v);
        doc["pulse_events"] = program.size();
        doc["total_delay_s"] = program.total_delay();
        text << "pulses:   " << program.size() << " events, total delay " << num(program.total_delay() * 1e3, 6)
             << " ms\n";

        std::optional<noise::ErrorParams> noise = cfg.effective_noise();
        std::array<double, 4> pops{};
        if (noise) {
            DensityMatrix rho = noise::ensemble_average(program, sys, *noise, DensityMatrix());
            DensityMatrix ideal = DensityMatrix::from_pure(PureState::basis(ideal_out.basis()));
            pops = probabilities(rho);
            double f = fidelity(rho, ideal);
            text << "noise:    rf_spread=" << num(noise->rf_spread) << " calib_offset=" << num(noise->calib_offset)
                 << " offset_spread_hz=" << num(noise->offset_spread_hz) << " ensemble=" << noise->ensemble_size
                 << " seed=" << noise->seed << "\nfinal density matrix:\n"
                 << matrix_text(rho.matrix()) << "fidelity vs ideal " << ideal_out.label() << ": " << num(f) << '\n';
            doc["noise"] = noise_json(*noise);
            doc["density_matrix"] = matrix_json(rho.matrix());
            doc["fidelity"] = f;
            kv.push_back({"fidelity", num(f)});
        } else {
            PureState final_state = apply(nmr::compile(program, sys), PureState::basis(0));
            pops = probabilities(final_state);
            text << "final:    " << ket_str(final_state) << '\n';
            doc["final_state"] = state_json(final_state);

            DensityMatrix averaged = nmr::temporal_average(sys, cfg.epsilon, program);
            nmr::PseudoPureFit fit = nmr::fit_pseudo_pure(averaged, ideal_out.basis());
            text << "temporal average (epsilon " << num(cfg.epsilon) << "): alpha=" << num(fit.alpha)
                 << " beta=" << num(fit.beta) << " residual=" << num(fit.residual, 3) << '\n';
            doc["temporal_average"] = {
                {"epsilon", cfg.epsilon}, {"alpha", fit.alpha}, {"beta", fit.beta}, {"residual", fit.residual}};
        }
        int k = noise ? argmax(pops) : dominant_basis(pops);
        if (k < 0) throw Error("pulse program left the register in a superposition");
        recovered = invert_column(table1(), v, k >> 1, k & 1).index();

        text << "populations:";
        for (int j = 0; j < 4; ++j) text << ' ' << kBasisKets[j] << '=' << num(pops[j]);
        text << "\nreadout:  y=" << (k >> 1) << " x=" << (k & 1) << "  " << kBasisKets[k] << '\n';
        doc["populations"] = pops;
        doc["readout"] = {{"y", k >> 1}, {"x", k & 1}, {"label", kBasisKets[k]}};
        kv.push_back({"readout", kBasisKets[k]});
        for (int j = 0; j < 4; ++j) kv.push_back({std::string("p") + std::to_string(j >> 1) + std::to_string(j & 1), num(pops[j])});
    }

    Message rec(recovered);
    text << "recovered message: " << rec.index() << " (bits " << rec.bits() << ")\n";
    doc["recovered_message"] = rec.index();
    doc["recovered_bits"] = rec.bits();
    kv.push_back({"recovered_message", std::to_string(rec.index())});

    CommandResult res;
    res.exit_code = rec == m ? kOk : kValidationFailed;
    switch (cfg.format) {
        case OutputFormat::Text: res.output = text.str(); break;
        case OutputFormat::Json: res.output = doc.dump(2) + "\n"; break;
        case OutputFormat::Csv: res.output = key_values_csv(kv); break;
    }
    maybe_write(cfg, res.output);
    return res;
}

CommandResult fig4(const RunConfig& cfg) {
    RunConfig c = cfg;
    c.layer = Layer::Pulse;
    c.validate();
    noise::ErrorParams p = c.noise ? *c.effective_noise() : noise::demo_error_params();
    if (!c.noise) p.seed = c.seed;

    auto panels = run_all_panels(c.spin_system, p, c.variant);
    double worst = max_relative_error(panels);

    // Panels a-d are the simulated experiment and e-h the theory, in the
    // order I, sigma_z, sigma_x, i*sigma_y.
    auto label = [](int i, bool theory) { return std::string(1, static_cast<char>((theory ? 'e' : 'a') + i)); };

    std::string csv = "panel,row,col,modulus\n";
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < 4; ++i) {
            const tomo::ModulusTable& t = pass == 0 ? panels[i].experiment_table : panels[i].theory_table;
            for (int r = 0; r < 4; ++r)
                for (int col = 0; col < 4; ++col)
                    csv += label(i, pass == 1) + "," + std::to_string(r) + "," + std::to_string(col) + "," +
                           num(t(r, col), 17) + "\n";
        }
    }

    ordered_json doc{{"variant", to_string(c.variant)}, {"noise", noise_json(p)}};
    ordered_json jpanels = ordered_json::array();
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < 4; ++i) {
            const auto& t = pass == 0 ? panels[i].experiment_table : panels[i].theory_table;
            jpanels.push_back({{"panel", label(i, pass == 1)},
                               {"kind", pass == 0 ? "experimental" : "theoretical"},
                               {"encoding", kEncodingNames[i]},
                               {"modulus", t.values()}});
        }
    }
    doc["panels"] = jpanels;
    ordered_json errs = ordered_json::array();
    for (int i = 0; i < 4; ++i)
        errs.push_back({{"encoding", kEncodingNames[i]},
                        {"output", panels[i].expected.label()},
                        {"absolute", panels[i].error.absolute},
                        {"relative", panels[i].error.relative},
                        {"row", panels[i].error.row},
                        {"col", panels[i].error.col}});
    doc["max_element_error"] = errs;
    doc["max_relative_error"] = worst;

    std::ostringstream summary;
    summary << "variant " << to_string(c.variant) << ", noise rf_spread=" << num(p.rf_spread)
            << " calib_offset=" << num(p.calib_offset) << " offset_spread_hz=" << num(p.offset_spread_hz)
            << " ensemble=" << p.ensemble_size << " seed=" << p.seed << '\n';
    for (int i = 0; i < 4; ++i)
        summary << "  " << label(i, false) << "/" << label(i, true) << "  " << kEncodingNames[i] << " -> "
                << panels[i].expected.label() << "  max element error " << num(panels[i].error.absolute, 5)
                << " (relative " << num(panels[i].error.relative, 5) << ")\n";
    summary << "largest relative error: " << num(worst, 5) << '\n';

    std::string payload;
    if (c.format == OutputFormat::Json) {
        payload = doc.dump(2) + "\n";
    } else if (c.format == OutputFormat::Csv || c.output_path) {
        payload = csv;
    } else {
        std::ostringstream text;
        for (int i = 0; i < 4; ++i) {
            text << "panel " << label(i, false) << " (simulated, " << kEncodingNames[i] << ")\n"
                 << modulus_text(panels[i].experiment_table) << "panel " << label(i, true) << " (theory, "
                 << kEncodingNames[i] << ")\n"
                 << modulus_text(panels[i].theory_table) << '\n';
        }
        payload = text.str() + summary.str();
    }

    CommandResult res;
    if (c.output_path) {
        write_text_file(*c.output_path, payload);
        res.output = summary.str() + "wrote " + *c.output_path + "\n";
    } else {
        res.output = payload;
    }
    return res;
}

CommandResult tomo(const RunConfig& cfg) {
    cfg.validate();
    const Message m(cfg.message);
    DensityMatrix state;
    DecodedOutput expected = DenseCodingCircuit().run(m, cfg.variant);
    if (cfg.layer == Layer::Ideal) {
        DenseCodingCircuit c;
        state = DensityMatrix::from_pure(c.decode(c.encode(c.prepare_bell(cfg.variant), m)));
    } else {
        state = run_experiment(cfg.spin_system, cfg.effective_noise(), m, cfg.variant).simulated;
    }
    auto records = tomo::simulate_readouts(state);
    DensityMatrix rec = tomo::reconstruct(records);
    DensityMatrix theory = DensityMatrix::from_pure(PureState::basis(expected.basis()));
    tomo::ModulusTable table = tomo::element_modulus_table(rec);
    tomo::ElementError err = tomo::max_element_error(rec, theory);
    double f = fidelity(rec, theory);

    CommandResult res;
    if (cfg.format == OutputFormat::Json) {
        ordered_json jrec = ordered_json::array();
        for (const auto& r : records) {
            ordered_json obs = ordered_json::object();
            for (int q = 1; q < tomo::kNumOperators; ++q)
                if (r.detected.test(q)) obs[tomo::product_label(q)] = clean(r.observed[q]);
            jrec.push_back({{"readout_a", tomo::to_string(r.readout_a)},
                            {"readout_b", tomo::to_string(r.readout_b)},
                            {"detected", obs}});
        }
        ordered_json doc{{"layer", to_string(cfg.layer)},
                         {"message", m.index()},
                         {"variant", to_string(cfg.variant)},
                         {"records", jrec},
                         {"reconstructed", matrix_json(rec.matrix())},
                         {"modulus", table.values()},
                         {"expected", expected.label()},
                         {"fidelity", f},
                         {"max_element_error", {{"absolute", err.absolute}, {"relative", err.relative}}}};
        res.output = doc.dump(2) + "\n";
    } else if (cfg.format == OutputFormat::Csv) {
        res.output = table.to_csv();
    } else {
        std::ostringstream os;
        os << "readout records (detected single-quantum terms):\n";
        for (const auto& r : records) {
            os << "  a:" << tomo::to_string(r.readout_a) << " b:" << tomo::to_string(r.readout_b) << " ";
            for (int q = 1; q < tomo::kNumOperators; ++q)
                if (r.detected.test(q)) os << ' ' << tomo::product_label(q) << '=' << num(r.observed[q], 6);
            os << '\n';
        }
        os << "reconstructed density matrix:\n"
           << matrix_text(rec.matrix()) << "element moduli:\n"
           << modulus_text(table) << "fidelity vs " << expected.label() << ": " << num(f) << '\n'
           << "max element error: " << num(err.absolute, 6) << " (relative " << num(err.relative, 6) << ")\n";
        res.output = os.str();
    }
    maybe_write(cfg, res.output);
    return res;
}

CommandResult validate(const RunConfig& cfg) {
    validation::ValidationOptions opts;
    opts.seed = cfg.seed;
    opts.spin_system = cfg.spin_system;
    if (cfg.noise) opts.ensemble_size = cfg.noise->ensemble_size;
    auto results = validation::run_all(opts);

    CommandResult res;
    res.exit_code = validation::all_passed(results) ? kOk : kValidationFailed;
    if (cfg.format == OutputFormat::Json) {
        ordered_json checks = ordered_json::array();
        for (const auto& r : results)
            checks.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        res.output = ordered_json{{"seed", cfg.seed}, {"checks", checks}, {"passed", res.exit_code == kOk}}.dump(2) +
                     "\n";
    } else {
        res.output = validation::render_report(results);
    }
    maybe_write(cfg, res.output);
    return res;
}

}  // namespace densecode::commands
