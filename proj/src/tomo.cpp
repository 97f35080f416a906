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

#include "densecode/tomo.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "densecode/nmrsim.hpp"

namespace densecode::tomo {

namespace {

constexpr char kPauliLetters[] = {'I', 'X', 'Y', 'Z'};
constexpr std::array<const char*, 4> kBasisLabels{"|00>", "|01>", "|10>", "|11>"};
constexpr double kRankTol = 1e-8;

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Matrix4 kron(const Matrix2& b, const Matrix2& a) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = b(i, k) * a(j, l);
    return out;
}

}  // namespace

int product_index(int pb, int pa) {
    if (pb < 0 || pb > 3 || pa < 0 || pa > 3) throw InvalidInput("Pauli index out of range");
    return 4 * pb + pa;
}

Matrix4 product_operator(int index) {
    if (index < 0 || index >= kNumOperators) throw InvalidInput("product operator index out of range");
    return kron(pauli::by_index(index / 4), pauli::by_index(index % 4));
}

std::string product_label(int index) {
    if (index < 0 || index >= kNumOperators) throw InvalidInput("product operator index out of range");
    return {kPauliLetters[index / 4], kPauliLetters[index % 4]};
}

const std::bitset<kNumOperators>& detectable_operators() {
    static const std::bitset<kNumOperators> mask = [] {
        std::bitset<kNumOperators> m;
        for (int other : {0, 3}) {
            for (int transverse : {1, 2}) {
                m.set(product_index(other, transverse));  // spin a signal
                m.set(product_index(transverse, other));  // spin b signal
            }
        }
        return m;
    }();
    return mask;
}

std::string_view to_string(ReadoutPulse p) {
    switch (p) {
        case ReadoutPulse::I: return "I";
        case ReadoutPulse::X90: return "X90";
        case ReadoutPulse::Y90: return "Y90";
    }
    return "?";
}

Unitary2 readout_unitary(ReadoutPulse p) {
    switch (p) {
        case ReadoutPulse::I: return Unitary2();
        case ReadoutPulse::X90: return nmr::rotation(nmr::Axis::X, std::numbers::pi / 2);
        case ReadoutPulse::Y90: return nmr::rotation(nmr::Axis::Y, std::numbers::pi / 2);
    }
    return Unitary2();
}

std::vector<ReadoutRecord> simulate_readouts(const DensityMatrix& rho) {
    std::vector<ReadoutRecord> records;
    records.reserve(9);
    for (ReadoutPulse pb : kReadoutPulses) {
        for (ReadoutPulse pa : kReadoutPulses) {
            DensityMatrix rotated = evolve(tensor(readout_unitary(pb), readout_unitary(pa)), rho);
            ReadoutRecord rec;
            rec.readout_a = pa;
            rec.readout_b = pb;
            for (int q = 0; q < kNumOperators; ++q)
                rec.observed[q] = (product_operator(q) * rotated.matrix()).trace().real();
            rec.observed[0] = 1.0;
            rec.detected = detectable_operators();
            records.push_back(rec);
        }
    }
    return records;
}

DensityMatrix reconstruct(std::span<const ReadoutRecord> records) {
    // Each detected entry P of a record with readout R gives
    //   <P> = tr(P R rho R^dag) = sum_Q c_Q tr(R^dag P R Q) / 4.
    std::vector<std::array<double, 15>> rows;
    std::vector<double> rhs;
    for (const ReadoutRecord& rec : records) {
        if (rec.observed[0] != 1.0) throw InvalidInput("readout record identity expectation must be 1");
        Matrix4 r = kron(readout_unitary(rec.readout_b).matrix(), readout_unitary(rec.readout_a).matrix());
        for (int p = 1; p < kNumOperators; ++p) {
            if (!rec.detected.test(p)) continue;
            if (!std::isfinite(rec.observed[p])) throw InvalidInput("readout record has a non-finite entry");
            Matrix4 heis = r.adjoint() * product_operator(p) * r;
            std::array<double, 15> row{};
            for (int q = 1; q < kNumOperators; ++q) row[q - 1] = (heis * product_operator(q)).trace().real() / 4.0;
            rows.push_back(row);
            rhs.push_back(rec.observed[p]);
        }
    }
    if (rows.size() < 15) throw RankDeficient("only " + std::to_string(rows.size()) + " observations for 15 unknowns");

    Eigen::MatrixXd a(rows.size(), 15);
    Eigen::VectorXd b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int q = 0; q < 15; ++q) a(static_cast<Eigen::Index>(i), q) = rows[i][q];
        b(static_cast<Eigen::Index>(i)) = rhs[i];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= kRankTol * sv(0))
        throw RankDeficient("readout records do not determine every product-operator coefficient");
    Eigen::VectorXd c = svd.solve(b);

    Matrix4 rho = 0.25 * Matrix4::Identity();
    for (int q = 1; q < kNumOperators; ++q) rho += 0.25 * c(q - 1) * product_operator(q);
    rho = (0.5 * (rho + rho.adjoint())).eval();

    Eigen::SelfAdjointEigenSolver<Matrix4> es(rho);
    if (es.eigenvalues().minCoeff() < kClipThreshold) {
        Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
        ev /= ev.sum();
        rho = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
        rho = (0.5 * (rho + rho.adjoint())).eval();
    }
    return DensityMatrix(rho);
}

// ---- ModulusTable -------------------------------------------------------

ModulusTable::ModulusTable(const std::array<std::array<double, 4>, 4>& values) : values_(values) {
    for (const auto& row : values_)
        for (double v : row)
            if (!std::isfinite(v) || v < 0.0) throw InvalidInput("modulus entries must be finite and non-negative");
}

double ModulusTable::max_value() const {
    double m = 0.0;
    for (const auto& row : values_)
        for (double v : row) m = std::max(m, v);
    return m;
}

std::string ModulusTable::to_csv() const {
    std::ostringstream os;
    os << "row,col,modulus\n";
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) os << r << ',' << c << ',' << fmt_double(values_[r][c]) << '\n';
    return os.str();
}

ModulusTable ModulusTable::from_csv(std::string_view csv) {
    std::istringstream is{std::string(csv)};
    std::string line;
    if (!std::getline(is, line) || line != "row,col,modulus") throw InvalidInput("modulus CSV: missing header");
    std::array<std::array<double, 4>, 4> v{};
    std::array<std::array<bool, 4>, 4> seen{};
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        int r = -1, c = -1;
        double m = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf", &r, &c, &m) != 3 || r < 0 || r > 3 || c < 0 || c > 3)
            throw InvalidInput("modulus CSV: bad line '" + line + "'");
        v[r][c] = m;
        seen[r][c] = true;
    }
    for (const auto& row : seen)
        for (bool s : row)
            if (!s) throw InvalidInput("modulus CSV: missing entries");
    return ModulusTable(v);
}

std::string ModulusTable::to_json() const {
    nlohmann::json j;
    j["labels"] = kBasisLabels;
    j["modulus"] = values_;
    return j.dump();
}

ModulusTable ModulusTable::from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        return ModulusTable(j.at("modulus").get<std::array<std::array<double, 4>, 4>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("modulus JSON: ") + e.what());
    }
}

ModulusTable element_modulus_table(const DensityMatrix& rho) {
    std::array<std::array<double, 4>, 4> v{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) v[r][c] = std::abs(rho(r, c));
    return ModulusTable(v);
}

ElementError max_element_error(const ModulusTable& exp, const ModulusTable& theory) {
    ElementError e;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            double d = std::abs(exp(r, c) - theory(r, c));
            if (d > e.absolute) {
                e.absolute = d;
                e.row = r;
                e.col = c;
            }
        }
    }
    double scale = theory.max_value();
    e.relative = scale > 0.0 ? e.absolute / scale : 0.0;
    return e;
}

ElementError max_element_error(const DensityMatrix& rho_exp, const DensityMatrix& rho_theory) {
    return max_element_error(element_modulus_table(rho_exp), element_modulus_table(rho_theory));
}

}  // namespace densecode::tomo
