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

#include "gauss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gauss/error.hpp"

namespace gauss {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAState: return "NotAState";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPRepresentable: return "NotPRepresentable";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NotRealBranch: return "NotRealBranch";
    case ErrorKind::NoRealSolution: return "NoRealSolution";
    case ErrorKind::InvalidD: return "InvalidD";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::WrongModeCount: return "WrongModeCount";
  }
  return "Unknown";
}

namespace linalg {

namespace {

void check_dim(int dim) {
  if (dim != 2 && dim != 4) {
    throw Error(ErrorKind::DimensionMismatch, "dimension must be 2 or 4, got " + std::to_string(dim));
  }
}

void check_same(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()) + "x" + std::to_string(b.dim()));
  }
}

}  // namespace

CMatrix::CMatrix(int dim) : dim_(dim) { check_dim(dim); }

CMatrix::CMatrix(int dim, std::initializer_list<cplx> row_major) : CMatrix(dim) {
  if (row_major.size() != static_cast<std::size_t>(dim * dim)) {
    throw Error(ErrorKind::DimensionMismatch, "initializer has wrong number of entries");
  }
  std::copy(row_major.begin(), row_major.end(), a_.begin());
}

CMatrix CMatrix::identity(int dim) {
  CMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<cplx> entries) {
  CMatrix m(static_cast<int>(entries.size()));
  int i = 0;
  for (const cplx& e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

CMatrix CMatrix::transpose() const {
  CMatrix r(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) m = std::max(m, std::abs(a_[static_cast<std::size_t>(i)]));
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  check_same(*this, o);
  for (int i = 0; i < dim_ * dim_; ++i) a_[static_cast<std::size_t>(i)] += o.a_[static_cast<std::size_t>(i)];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  check_same(*this, o);
  for (int i = 0; i < dim_ * dim_; ++i) a_[static_cast<std::size_t>(i)] -= o.a_[static_cast<std::size_t>(i)];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (int i = 0; i < dim_ * dim_; ++i) a_[static_cast<std::size_t>(i)] *= s;
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  check_same(a, b);
  const int n = a.dim();
  CMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) { return (a - b).max_abs(); }

CMatrix structure_matrix(Structure s, int dim) {
  check_dim(dim);
  CMatrix m(dim);
  switch (s) {
    case Structure::E:
      for (int i = 0; i < dim; ++i) m(i, i) = (i % 2 == 0) ? 1.0 : -1.0;
      break;
    case Structure::T:
      for (int k = 0; k < dim; k += 2) {
        m(k, k + 1) = 1.0;
        m(k + 1, k) = 1.0;
      }
      break;
    case Structure::T1:
      if (dim != 4) throw Error(ErrorKind::DimensionMismatch, "T1 is defined for two modes only");
      m(0, 1) = m(1, 0) = 1.0;
      m(2, 2) = m(3, 3) = 1.0;
      break;
    case Structure::E_T1: {
      const CMatrix t1 = structure_matrix(Structure::T1, dim);
      return t1 * structure_matrix(Structure::E, dim) * t1;
    }
  }
  return m;
}

SymMatrix::SymMatrix(const CMatrix& m) : m_(m.dim()) {
  const CMatrix t = structure_matrix(Structure::T, m.dim());
  CMatrix avg = 0.5 * (m + t * m.transpose() * t);
  const double scale = std::max(1.0, avg.max_abs());
  if (max_abs_diff(avg, avg.adjoint()) > kHermitianTol * scale) {
    throw Error(ErrorKind::NotHermitian, "matrix is not Hermitian within tolerance");
  }
  m_ = 0.5 * (avg + avg.adjoint());
}

cplx determinant(const CMatrix& m) {
  const int n = m.dim();
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  CMatrix a = m;
  cplx det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const cplx f = a(r, col) / a(col, col);
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

CMatrix inverse(const CMatrix& m) {
  const cplx det = determinant(m);
  if (std::abs(det) <= kSingularTol) {
    throw Error(ErrorKind::SingularMatrix, "|det| = " + std::to_string(std::abs(det)));
  }
  const int n = m.dim();
  if (n == 2) {
    return CMatrix(2, {m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det});
  }
  CMatrix a = m;
  CMatrix inv = CMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (piv != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    }
    const cplx p = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

SymMatrix invert(const SymMatrix& m) { return SymMatrix(inverse(m.mat())); }

std::vector<double> eigenvalues_hermitian(const CMatrix& m) {
  const int n = m.dim();
  CMatrix a = m;
  const double scale = std::max(a.max_abs(), 1e-300);
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-17 * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r <= 1e-300) continue;
        // V = diag(1, e^{-i phi}) * R(theta) zeroes the (p, q) entry of V^dag A V.
        const cplx phase = a(p, q) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const cplx vpp = c;
        const cplx vpq = s;
        const cplx vqp = -s * std::conj(phase);
        const cplx vqq = c * std::conj(phase);
        for (int k = 0; k < n; ++k) {  // A <- A V
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        for (int k = 0; k < n; ++k) {  // A <- V^dag A
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> eigenvalues_hermitian(const SymMatrix& m) { return eigenvalues_hermitian(m.mat()); }

SymMatrix conj_by_structure(const SymMatrix& m, Structure s) {
  const CMatrix sm = structure_matrix(s, m.dim());
  return SymMatrix(sm * m.mat() * sm);
}

}  // namespace linalg
}  // namespace gauss
