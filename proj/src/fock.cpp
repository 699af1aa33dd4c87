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

#include "gauss/fock.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "gauss/error.hpp"

namespace gauss::fock {

using linalg::CMatrix;

FockOperator::FockOperator(int modes, int cutoff, Eigen::MatrixXcd entries)
    : modes_(modes), cutoff_(cutoff), entries_(std::move(entries)) {
  if (modes_ != 1 && modes_ != 2) throw Error(ErrorKind::WrongModeCount, "modes must be 1 or 2");
  const int side = modes_ == 1 ? cutoff_ + 1 : (cutoff_ + 1) * (cutoff_ + 1);
  if (entries_.rows() != side || entries_.cols() != side) {
    throw Error(ErrorKind::DimensionMismatch, "entry matrix does not match (cutoff + 1)^modes");
  }
}

double FockOperator::truncation_loss() const { return std::abs(1.0 - entries_.trace().real()); }

namespace {

std::vector<double> log_factorials(int n) {
  std::vector<double> lf(static_cast<std::size_t>(n + 1), 0.0);
  for (int k = 1; k <= n; ++k) lf[static_cast<std::size_t>(k)] = lf[static_cast<std::size_t>(k - 1)] + std::log(k);
  return lf;
}

// Taylor coefficients of c0 * exp(x^T B x / 2) on the box [0, side)^nv, from
// k_i c_k = sum_j B_ij c_{k - e_i - e_j} (with i the first non-zero index of k).
std::vector<cplx> gaussian_taylor(const CMatrix& b, cplx c0, int side) {
  const int nv = b.dim();
  std::vector<std::size_t> stride(static_cast<std::size_t>(nv));
  std::size_t total = 1;
  for (int v = nv - 1; v >= 0; --v) {
    stride[static_cast<std::size_t>(v)] = total;
    total *= static_cast<std::size_t>(side);
  }
  std::vector<cplx> coef(total, 0.0);
  coef[0] = c0;

  std::vector<int> k(static_cast<std::size_t>(nv), 0);
  for (std::size_t flat = 1; flat < total; ++flat) {
    for (int v = nv - 1; v >= 0; --v) {  // odometer increment
      auto& kv = k[static_cast<std::size_t>(v)];
      if (++kv < side) break;
      kv = 0;
    }
    int i = 0;
    while (k[static_cast<std::size_t>(i)] == 0) ++i;
    const std::size_t base = flat - stride[static_cast<std::size_t>(i)];
    cplx acc = 0.0;
    for (int j = 0; j < nv; ++j) {
      const cplx bij = b(i, j);
      if (bij == 0.0) continue;
      const int need = (j == i) ? 2 : 1;
      if (k[static_cast<std::size_t>(j)] < need) continue;
      acc += bij * coef[base - stride[static_cast<std::size_t>(j)]];
    }
    coef[flat] = acc / static_cast<double>(k[static_cast<std::size_t>(i)]);
  }
  return coef;
}

Eigen::MatrixXcd lowering(int side) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(side, side);
  for (int k = 0; k + 1 < side; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
  return a;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  Eigen::MatrixXcd r(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) r.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return r;
}

cplx expect(const Eigen::MatrixXcd& op, const Eigen::MatrixXcd& rho) { return (op * rho).trace(); }

}  // namespace

FockOperator from_kernel(const GaussianKernel& k, int cutoff, double max_loss) {
  if (cutoff < 4) throw Error(ErrorKind::CutoffTooSmall, "cutoff must be at least 4");
  const GaussianKernel q = convert(k, Kind::Q);
  const int modes = q.modes();
  const int dim = q.dim();
  const int side = cutoff + 1;

  const CMatrix& qm = q.matrix().mat();
  const CMatrix t = linalg::structure_matrix(linalg::Structure::T, dim);
  const CMatrix b = t * (CMatrix::identity(dim) - qm);
  const cplx c0 = std::sqrt(linalg::determinant(qm));
  const std::vector<cplx> coef = gaussian_taylor(b, c0, side);
  const std::vector<double> lf = log_factorials(cutoff);
  auto scale = [&](int m, int n) {
    return std::exp(0.5 * (lf[static_cast<std::size_t>(m)] + lf[static_cast<std::size_t>(n)]));
  };

  // Generating variables are ordered (ket_1, bra_1, ket_2, bra_2).
  Eigen::MatrixXcd rho;
  if (modes == 1) {
    rho.resize(side, side);
    for (int m = 0; m < side; ++m)
      for (int n = 0; n < side; ++n)
        rho(m, n) = coef[static_cast<std::size_t>(n * side + m)] * scale(m, n);
  } else {
    const int d2 = side * side;
    rho.resize(d2, d2);
    const std::size_t s1 = static_cast<std::size_t>(side);
    for (int m1 = 0; m1 < side; ++m1)
      for (int m2 = 0; m2 < side; ++m2)
        for (int n1 = 0; n1 < side; ++n1)
          for (int n2 = 0; n2 < side; ++n2) {
            const std::size_t flat = ((static_cast<std::size_t>(n1) * s1 + static_cast<std::size_t>(m1)) * s1 +
                                      static_cast<std::size_t>(n2)) * s1 + static_cast<std::size_t>(m2);
            rho(m1 * side + m2, n1 * side + n2) = coef[flat] * scale(m1, n1) * scale(m2, n2);
          }
  }
  // The generating function is exactly Hermitian; remove round-off asymmetry.
  rho = 0.5 * (rho + rho.adjoint()).eval();

  FockOperator f(modes, cutoff, std::move(rho));
  if (f.truncation_loss() > max_loss) {
    throw Error(ErrorKind::CutoffTooSmall, "truncation loss " + std::to_string(f.truncation_loss()) +
                                               " exceeds " + std::to_string(max_loss) + " at cutoff " +
                                               std::to_string(cutoff));
  }
  return f;
}

std::vector<double> spectrum(const FockOperator& f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(f.entries(), Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

FockOperator partial_transpose_fock(const FockOperator& f) {
  if (f.modes() != 2) throw Error(ErrorKind::WrongModeCount, "partial transpose needs two modes");
  const int side = f.cutoff() + 1;
  Eigen::MatrixXcd pt(f.dim(), f.dim());
  for (int m1 = 0; m1 < side; ++m1)
    for (int m2 = 0; m2 < side; ++m2)
      for (int n1 = 0; n1 < side; ++n1)
        for (int n2 = 0; n2 < side; ++n2) pt(m1 * side + m2, n1 * side + n2) = f(n1 * side + m2, m1 * side + n2);
  return FockOperator(2, f.cutoff(), std::move(pt));
}

double trace_power(const FockOperator& f, int k) {
  if (k < 1) throw std::invalid_argument("trace power must be >= 1");
  Eigen::MatrixXcd p = f.entries();
  for (int i = 1; i < k; ++i) p = (p * f.entries()).eval();
  return p.trace().real();
}

double parity_trace(const FockOperator& f) {
  const int side = f.cutoff() + 1;
  double acc = 0.0;
  for (int i = 0; i < f.dim(); ++i) {
    const int occupation = f.modes() == 1 ? i : i / side + i % side;
    acc += (occupation % 2 == 0 ? 1.0 : -1.0) * f(i, i).real();
  }
  return (f.modes() == 1 ? 2.0 : 4.0) * acc;
}

onemode::OneModeMoments one_mode_moments(const FockOperator& f) {
  if (f.modes() != 1) throw Error(ErrorKind::WrongModeCount, "expected one mode");
  const Eigen::MatrixXcd a = lowering(f.cutoff() + 1);
  return {expect(a.adjoint() * a, f.entries()).real(), -expect(a * a, f.entries())};
}

twomode::TwoModeMoments two_mode_moments(const FockOperator& f) {
  if (f.modes() != 2) throw Error(ErrorKind::WrongModeCount, "expected two modes");
  const int side = f.cutoff() + 1;
  const Eigen::MatrixXcd a = lowering(side);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(side, side);
  const Eigen::MatrixXcd a1 = kron(a, id);
  const Eigen::MatrixXcd a2 = kron(id, a);
  const Eigen::MatrixXcd& rho = f.entries();
  twomode::TwoModeMoments p;
  p.n1 = expect(a1.adjoint() * a1, rho).real();
  p.n2 = expect(a2.adjoint() * a2, rho).real();
  p.m1 = -expect(a1 * a1, rho);
  p.m2 = -expect(a2 * a2, rho);
  p.ms = expect(a1 * a2.adjoint(), rho);
  p.mc = -expect(a1 * a2, rho);
  return p;
}

SignVerdict sign_of(double min_eigenvalue, double dead_band) {
  if (min_eigenvalue < -dead_band) return SignVerdict::Negative;
  if (min_eigenvalue >= -1e-9) return SignVerdict::NonNegative;
  return SignVerdict::Indeterminate;
}

bool agrees(bool analytic_positive, double min_eigenvalue, bool* indeterminate, double dead_band) {
  const SignVerdict s = sign_of(min_eigenvalue, dead_band);
  bool undecided = false;
  bool ok = true;
  if (analytic_positive) {
    ok = s != SignVerdict::Negative;
    undecided = s == SignVerdict::Indeterminate;
  } else {
    undecided = s != SignVerdict::Negative;
  }
  if (indeterminate != nullptr) *indeterminate = undecided;
  return ok;
}

}  // namespace gauss::fock
