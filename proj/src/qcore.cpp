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

#include "densecode/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace densecode {

namespace {

template <typename M>
bool all_finite(const M& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        auto v = m.data()[i];
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

template <typename M>
double max_abs_any(const M& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Eigen::Vector4d hermitian_eigenvalues(const Matrix4& m) {
    Eigen::SelfAdjointEigenSolver<Matrix4> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

void check_density(const Matrix4& m) {
    if (!all_finite(m)) throw InvalidInput("density matrix has non-finite entries");
    double herm = max_abs_any(Matrix4(m - m.adjoint()));
    if (herm > kDensityTol)
        throw InvalidInput("density matrix is not Hermitian (deviation " + std::to_string(herm) + ")");
    double tr_err = std::abs(m.trace() - Complex(1.0, 0.0));
    if (tr_err > kDensityTol)
        throw InvalidInput("density matrix trace differs from 1 by " + std::to_string(tr_err));
    double lo = hermitian_eigenvalues(m).minCoeff();
    if (lo < kPsdFloor)
        throw InvalidInput("density matrix has negative eigenvalue " + std::to_string(lo));
}

}  // namespace

// ---- PureState ----------------------------------------------------------

PureState::PureState() : amp_(Vector4::Zero()) { amp_(0) = 1.0; }

PureState::PureState(const Vector4& amp) : amp_(amp) {
    if (!all_finite(amp_)) throw InvalidInput("state has non-finite amplitudes");
    double n2 = amp_.squaredNorm();
    if (std::abs(n2 - 1.0) > kPureTol)
        throw InvalidInput("state is not normalized (norm^2 = " + std::to_string(n2) + ")");
}

PureState PureState::basis(int index) {
    if (index < 0 || index > 3) throw InvalidInput("basis index out of range: " + std::to_string(index));
    Vector4 v = Vector4::Zero();
    v(index) = 1.0;
    return PureState(v);
}

// ---- Unitaries ----------------------------------------------------------

bool is_unitary(const Matrix2& m, double tol) {
    return all_finite(m) && max_abs_any(Matrix2(m.adjoint() * m - Matrix2::Identity())) <= tol;
}

bool is_unitary(const Matrix4& m, double tol) {
    return all_finite(m) && max_abs_any(Matrix4(m.adjoint() * m - Matrix4::Identity())) <= tol;
}

Unitary2::Unitary2(const Matrix2& m) : m_(m) {
    if (!is_unitary(m_)) throw InvalidInput("2x2 matrix is not unitary");
}

Unitary2 Unitary2::operator*(const Unitary2& rhs) const { return Unitary2(Matrix2(m_ * rhs.m_)); }

Unitary2 Unitary2::adjoint() const { return Unitary2(Matrix2(m_.adjoint())); }

Unitary4::Unitary4(const Matrix4& m) : m_(m) {
    if (!is_unitary(m_)) throw InvalidInput("4x4 matrix is not unitary");
}

Unitary4 Unitary4::operator*(const Unitary4& rhs) const { return Unitary4(Matrix4(m_ * rhs.m_)); }

Unitary4 Unitary4::adjoint() const { return Unitary4(Matrix4(m_.adjoint())); }

// ---- DensityMatrix ------------------------------------------------------

DensityMatrix::DensityMatrix() : rho_(Matrix4::Zero()) { rho_(0, 0) = 1.0; }

DensityMatrix::DensityMatrix(const Matrix4& rho) : rho_(rho) { check_density(rho_); }

DensityMatrix DensityMatrix::from_pure(const PureState& s) {
    const Vector4& v = s.amplitudes();
    return DensityMatrix(Matrix4(v * v.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed() { return DensityMatrix(Matrix4(Matrix4::Identity() * 0.25)); }

Eigen::Vector4d DensityMatrix::eigenvalues() const { return hermitian_eigenvalues(rho_); }

bool is_density_matrix(const Matrix4& m) {
    try {
        check_density(m);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

double max_abs(const Matrix4& m) { return max_abs_any(m); }

// ---- Operations ---------------------------------------------------------

Unitary4 tensor(const Unitary2& ub, const Unitary2& ua) {
    Matrix4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + j, 2 * k + l) = ub(i, k) * ua(j, l);
    return Unitary4(out);
}

Unitary4 on_spin(Spin spin, const Unitary2& u) {
    return spin == Spin::B ? tensor(u, Unitary2()) : tensor(Unitary2(), u);
}

PureState apply(const Unitary4& u, const PureState& s) { return PureState(Vector4(u.matrix() * s.amplitudes())); }

DensityMatrix evolve(const Unitary4& u, const DensityMatrix& rho) {
    const Matrix4& m = u.matrix();
    Matrix4 out = m * rho.matrix() * m.adjoint();
    // Re-symmetrize to keep rounding from accumulating an anti-Hermitian part.
    out = (0.5 * (out + out.adjoint())).eval();
    return DensityMatrix(out);
}

std::array<double, 4> probabilities(const PureState& s) {
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[k] = std::norm(s[k]);
    return p;
}

std::array<double, 4> probabilities(const DensityMatrix& rho) {
    std::array<double, 4> p{};
    for (int k = 0; k < 4; ++k) p[k] = rho(k, k).real();
    return p;
}

double fidelity(const Matrix4& rho, const Matrix4& sigma) {
    check_density(rho);
    check_density(sigma);

    // For a pure argument F = tr(rho sigma) exactly; the square-root route
    // would add sqrt(rounding) ~ 1e-8 from the zero eigenvalues.
    auto is_pure = [](const Matrix4& m) { return std::abs((m * m).trace().real() - 1.0) < kPureTol; };
    if (is_pure(rho) || is_pure(sigma)) return std::clamp((rho * sigma).trace().real(), 0.0, 1.0);

    Eigen::SelfAdjointEigenSolver<Matrix4> es_rho(rho);
    Eigen::Vector4d ev = es_rho.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    Matrix4 sqrt_rho = es_rho.eigenvectors() * ev.cast<Complex>().asDiagonal() * es_rho.eigenvectors().adjoint();

    Matrix4 inner = sqrt_rho * sigma * sqrt_rho;
    inner = (0.5 * (inner + inner.adjoint())).eval();
    Eigen::Vector4d lam = hermitian_eigenvalues(inner);
    const double floor = 64 * std::numeric_limits<double>::epsilon() * std::max(lam.maxCoeff(), 0.0);
    lam = (lam.array() < floor).select(0.0, lam);
    double tr = lam.cwiseSqrt().sum();
    return std::clamp(tr * tr, 0.0, 1.0);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) { return fidelity(rho.matrix(), sigma.matrix()); }

double phase_aligned_distance(const Matrix4& a, const Matrix4& b) {
    Complex overlap = (b.adjoint() * a).trace();
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
    return max_abs_any(Matrix4(a - phase * b));
}

namespace pauli {

Matrix2 identity() { return Matrix2::Identity(); }

Matrix2 x() {
    Matrix2 m;
    m << 0, 1, 1, 0;
    return m;
}

Matrix2 y() {
    Matrix2 m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}

Matrix2 z() {
    Matrix2 m;
    m << 1, 0, 0, -1;
    return m;
}

Matrix2 by_index(int p) {
    switch (p) {
        case 0: return identity();
        case 1: return x();
        case 2: return y();
        case 3: return z();
        default: throw InvalidInput("Pauli index out of range: " + std::to_string(p));
    }
}

}  // namespace pauli

}  // namespace densecode
