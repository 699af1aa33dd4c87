// Copyright 2026 The gausstool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex matrices of dimension 2 (one mode) or 4 (two modes), laid out
// in the (z1, z1*, z2, z2*) ordering used by every kernel in this library.

#include <array>
#include <complex>
#include <vector>

namespace gauss {

using cplx = std::complex<double>;

namespace linalg {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kSingularTol = 1e-12;

/// General dim x dim complex matrix, dim in {2, 4}. No structural invariants.
class CMatrix {
 public:
  explicit CMatrix(int dim = 2);
  CMatrix(int dim, std::initializer_list<cplx> row_major);

  static CMatrix identity(int dim);
  static CMatrix diagonal(std::initializer_list<cplx> entries);

  int dim() const noexcept { return dim_; }
  cplx& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * dim_ + j)]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * dim_ + j)]; }

  CMatrix adjoint() const;
  CMatrix transpose() const;
  cplx trace() const;
  double max_abs() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

 private:
  int dim_;
  std::array<cplx, 16> a_{};
};

/// Largest entrywise distance; DimensionMismatch when dims differ.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

enum class Structure { E, T, T1, E_T1 };

/// E = diag(1,-1) per mode; T swaps (z, z*) in every mode; T1 swaps mode 1 only
/// (dim 4); E_T1 = T1 E T1.
CMatrix structure_matrix(Structure s, int dim);

/// Hermitian matrix held in the T-symmetric normal form M = T M^T T.
///
/// Construction averages the input with T M^T T, which leaves every quadratic
/// form z^dag M z unchanged, and then with its adjoint after checking that the
/// input was Hermitian to within kHermitianTol (scaled by the entry magnitude).
class SymMatrix {
 public:
  explicit SymMatrix(const CMatrix& m);

  int dim() const noexcept { return m_.dim(); }
  int modes() const noexcept { return m_.dim() / 2; }
  const cplx& operator()(int i, int j) const { return m_(i, j); }
  const CMatrix& mat() const noexcept { return m_; }

 private:
  CMatrix m_;
};

cplx determinant(const CMatrix& m);

/// General inverse (2x2 adjugate, 4x4 partial-pivot Gauss-Jordan).
/// Throws SingularMatrix when |det| <= kSingularTol.
CMatrix inverse(const CMatrix& m);

SymMatrix invert(const SymMatrix& m);

/// Real eigenvalues of a Hermitian matrix, ascending, via cyclic complex Jacobi
/// rotations.
std::vector<double> eigenvalues_hermitian(const CMatrix& m);
std::vector<double> eigenvalues_hermitian(const SymMatrix& m);

/// s * m * s for a structure matrix s (each s is its own inverse).
SymMatrix conj_by_structure(const SymMatrix& m, Structure s);

}  // namespace linalg
}  // namespace gauss
