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

// Two-spin state space. Basis index = 2*b + a, so |ba> with spin b (13C) as
// the left label and spin a (1H) as the right label:
//   0 = |00>, 1 = |01>, 2 = |10>, 3 = |11>.

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "densecode/error.hpp"

namespace densecode {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;

inline constexpr double kPureTol = 1e-12;
inline constexpr double kDensityTol = 1e-10;
inline constexpr double kPsdFloor = -1e-9;

enum class Spin { A, B };

/// Index of basis state |b a>.
constexpr int basis_index(int b, int a) { return 2 * b + a; }

/// Normalized two-spin state vector. Global phase is kept as given.
class PureState {
   public:
    /// |00>.
    PureState();
    /// Throws InvalidInput if amplitudes are non-finite or not normalized
    /// within kPureTol.
    explicit PureState(const Vector4& amp);

    static PureState basis(int index);
    static PureState basis(int b, int a) { return basis(basis_index(b, a)); }

    const Vector4& amplitudes() const { return amp_; }
    Complex operator[](int k) const { return amp_(k); }

    double norm() const { return amp_.norm(); }

   private:
    Vector4 amp_;
};

/// 2x2 single-spin unitary.
class Unitary2 {
   public:
    Unitary2() : m_(Matrix2::Identity()) {}
    /// Throws InvalidInput if ||U^dag U - I||_max > kDensityTol.
    explicit Unitary2(const Matrix2& m);

    const Matrix2& matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    Unitary2 operator*(const Unitary2& rhs) const;
    Unitary2 adjoint() const;

   private:
    Matrix2 m_;
};

/// 4x4 two-spin unitary.
class Unitary4 {
   public:
    Unitary4() : m_(Matrix4::Identity()) {}
    explicit Unitary4(const Matrix4& m);

    static Unitary4 identity() { return Unitary4(); }

    const Matrix4& matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

    /// Composition: (*this * rhs) applies rhs first.
    Unitary4 operator*(const Unitary4& rhs) const;
    Unitary4 adjoint() const;

   private:
    Matrix4 m_;
};

/// Hermitian, unit-trace, positive-semidefinite 4x4 operator.
class DensityMatrix {
   public:
    /// |00><00|.
    DensityMatrix();
    /// Throws InvalidInput on any invariant violation.
    explicit DensityMatrix(const Matrix4& rho);

    static DensityMatrix from_pure(const PureState& s);
    static DensityMatrix maximally_mixed();

    const Matrix4& matrix() const { return rho_; }
    Complex operator()(int r, int c) const { return rho_(r, c); }

    /// Eigenvalues in ascending order.
    Eigen::Vector4d eigenvalues() const;

   private:
    Matrix4 rho_;
};

/// Non-throwing invariant checks on raw matrices.
bool is_unitary(const Matrix2& m, double tol = kDensityTol);
bool is_unitary(const Matrix4& m, double tol = kDensityTol);
bool is_density_matrix(const Matrix4& m);
double max_abs(const Matrix4& m);

/// result[2i+j, 2k+l] = ub[i,k] * ua[j,l]; ub acts on spin b, ua on spin a.
Unitary4 tensor(const Unitary2& ub, const Unitary2& ua);
/// Place a single-spin unitary on `spin`, identity on the other.
Unitary4 on_spin(Spin spin, const Unitary2& u);

PureState apply(const Unitary4& u, const PureState& s);
DensityMatrix evolve(const Unitary4& u, const DensityMatrix& rho);

std::array<double, 4> probabilities(const PureState& s);
std::array<double, 4> probabilities(const DensityMatrix& rho);

/// Uhlmann fidelity (squared convention): F(rho, |psi><psi|) = <psi|rho|psi>.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Raw-matrix form; throws InvalidInput for non-PSD or non-Hermitian input.
double fidelity(const Matrix4& rho, const Matrix4& sigma);

/// min over phi of ||a - e^{i phi} b||_max, with phi taken from the
/// Hilbert-Schmidt overlap tr(b^dag a).
double phase_aligned_distance(const Matrix4& a, const Matrix4& b);

namespace pauli {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
Matrix2 z();
/// 0 = I, 1 = X, 2 = Y, 3 = Z.
Matrix2 by_index(int p);
}  // namespace pauli

}  // namespace densecode
