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

#include "gauss/twomode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gauss/error.hpp"

namespace gauss::twomode {

using linalg::CMatrix;
using linalg::Structure;
using linalg::SymMatrix;

namespace {

void require_two_mode(const GaussianKernel& k) {
  if (k.modes() != 2) throw Error(ErrorKind::WrongModeCount, "expected a two-mode kernel");
}

GaussianKernel as_c(const GaussianKernel& k) {
  require_two_mode(k);
  return convert(k, Kind::C);
}

double det_real(const CMatrix& m) { return linalg::determinant(m).real(); }

}  // namespace

GaussianKernel build_c2(const TwoModeMoments& p) {
  const double d1 = p.n1 + 0.5;
  const double d2 = p.n2 + 0.5;
  const CMatrix c(4, {d1,                 p.m1,               p.ms,               p.mc,
                      std::conj(p.m1),    d1,                 std::conj(p.mc),    std::conj(p.ms),
                      std::conj(p.ms),    p.mc,               d2,                 p.m2,
                      std::conj(p.mc),    p.ms,               std::conj(p.m2),    d2});
  return GaussianKernel(Kind::C, SymMatrix(c));
}

TwoModeMoments moments_of(const GaussianKernel& c) {
  const GaussianKernel k = as_c(c);
  return {k(0, 0).real() - 0.5, k(2, 2).real() - 0.5, k(0, 1), k(2, 3), k(0, 2), k(0, 3)};
}

GaussianKernel thermal_product(const ThermalPair& g) {
  for (double gi : {g.g1, g.g2}) {
    if (!(gi > -1.0 && gi < 1.0)) throw Error(ErrorKind::NotAState, "g must lie in (-1, 1)");
  }
  const double d1 = 0.5 * (1.0 + g.g1) / (1.0 - g.g1);
  const double d2 = 0.5 * (1.0 + g.g2) / (1.0 - g.g2);
  return GaussianKernel(Kind::C, SymMatrix(CMatrix::diagonal({d1, d1, d2, d2})));
}

double trace_g2(const GaussianKernel& c) {
  return 1.0 / (4.0 * std::sqrt(det_real(as_c(c).matrix().mat())));
}

double trace_g4(const GaussianKernel& c) {
  const double t2 = trace_g2(c);
  const double det_cbar = det_real(squared_kernel(c).matrix().mat());
  return t2 * t2 / (4.0 * std::sqrt(det_cbar));
}

GaussianKernel squared_kernel(const GaussianKernel& c) {
  const CMatrix cm = as_c(c).matrix().mat();
  const CMatrix e = linalg::structure_matrix(Structure::E, 4);
  return GaussianKernel(Kind::C, SymMatrix(0.5 * cm + 0.125 * (e * linalg::inverse(cm) * e)));
}

DetDiagnostic positivity_diagnostic(const GaussianKernel& c) {
  DetDiagnostic d;
  d.det_c = det_real(as_c(c).matrix().mat());
  d.det_cbar = det_real(squared_kernel(c).matrix().mat());
  d.cross = 4.0 * std::sqrt(d.det_c) * std::sqrt(d.det_cbar);
  d.left_ok = 1.0 / 16.0 + 3.0 * d.det_c - d.cross >= -kBoundaryTol;
  d.right_ok = 1.0 / 8.0 + 2.0 * d.det_c - d.cross >= -kBoundaryTol;
  return d;
}

bool positivity_by_dets(const GaussianKernel& c) {
  const DetDiagnostic d = positivity_diagnostic(c);
  return d.left_ok && d.right_ok;
}

NormalOrderParams2 normal_order_params(const GaussianKernel& k) {
  require_two_mode(k);
  const GaussianKernel q = convert(k, Kind::Q);
  return {1.0 - q(0, 0).real(), 1.0 - q(2, 2).real(), q(0, 1), q(2, 3), q(0, 2), q(0, 3)};
}

bool positivity_by_q(const GaussianKernel& c) {
  const NormalOrderParams2 q = normal_order_params(c);
  return q.nu1 + q.nu2 >= -kBoundaryTol && q.nu1 * q.nu2 - std::norm(q.mus) >= -kBoundaryTol;
}

double covariance_margin(const GaussianKernel& c) {
  const CMatrix cm = as_c(c).matrix().mat();
  return linalg::eigenvalues_hermitian(cm + 0.5 * linalg::structure_matrix(Structure::E, 4)).front();
}

GaussianKernel partial_transpose(const GaussianKernel& k) {
  require_two_mode(k);
  return GaussianKernel(k.kind(), linalg::conj_by_structure(k.matrix(), Structure::T1));
}

bool ppt_separable(const GaussianKernel& c) {
  if (!positivity_by_q(c)) throw Error(ErrorKind::NotPositive, "separability is defined for positive kernels only");
  return positivity_by_q(partial_transpose(as_c(c)));
}

bool ppt_direct(const GaussianKernel& c) {
  const NormalOrderParams2 q = normal_order_params(c);
  return q.nu1 * q.nu2 - std::norm(q.muc) >= -kBoundaryTol;
}

bool p_representable(const GaussianKernel& c) { return p_margin(as_c(c)) > 1e-12; }

ThermalPair thermal_pair(const GaussianKernel& c, ThermalMode mode) {
  const GaussianKernel k = as_c(c);
  if (mode == ThermalMode::Strict && !positivity_by_dets(k)) {
    throw Error(ErrorKind::NotPositive, "thermal pair requested for a non-positive kernel");
  }
  const double s = 4.0 * std::sqrt(det_real(k.matrix().mat()));
  const double kbar = 4.0 * std::sqrt(det_real(squared_kernel(k).matrix().mat()));
  // With t = x1/x2: (x1 + 1/x1)(x2 + 1/x2) = s + 1/s + t + 1/t.
  double b = 4.0 * kbar - s - 1.0 / s;
  if (!std::isfinite(b) || b < 2.0 - 1e-9) {
    throw Error(ErrorKind::NoRealSolution, "t + 1/t = " + std::to_string(b) + " < 2");
  }
  b = std::max(b, 2.0);
  const double t = 0.5 * (b + std::sqrt(b * b - 4.0));
  const double x1 = std::sqrt(s * t);
  const double x2 = std::sqrt(s / t);
  return {(x1 - 1.0) / (x1 + 1.0), (x2 - 1.0) / (x2 + 1.0)};
}

bool purity2(const GaussianKernel& c) {
  return std::abs(det_real(as_c(c).matrix().mat()) - 1.0 / 16.0) <= kBoundaryTol;
}

bool pure_marginal_separability(const GaussianKernel& c, int which) {
  if (!purity2(c)) throw Error(ErrorKind::NotPure, "det C != 1/16");
  if (which != 1 && which != 2) throw std::invalid_argument("block index must be 1 or 2");
  const GaussianKernel k = as_c(c);
  const int o = which == 1 ? 0 : 2;
  const cplx det = k(o, o) * k(o + 1, o + 1) - k(o, o + 1) * k(o + 1, o);
  return std::abs(det.real() - 0.25) <= kBoundaryTol;
}

CMatrix local_map(const onemode::SqueezeMap& u1, const onemode::SqueezeMap& u2) {
  CMatrix u(4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      u(i, j) = u1.matrix()(i, j);
      u(i + 2, j + 2) = u2.matrix()(i, j);
    }
  return u;
}

GaussianKernel local_squeeze_to_p_rep(const GaussianKernel& c, double theta) {
  const GaussianKernel k = as_c(c);
  if (!positivity_by_q(k)) throw Error(ErrorKind::NotPositive, "local squeeze requested for a non-positive kernel");
  const onemode::SqueezeMap u(theta, 0.0, 0.0);
  const CMatrix e = linalg::structure_matrix(Structure::E, 4);
  const CMatrix eue = e * local_map(u, u) * e;
  return GaussianKernel(Kind::C, SymMatrix(eue * k.matrix().mat() * eue.adjoint()));
}

TwoModeVerdict classify(const GaussianKernel& c) {
  const GaussianKernel k = as_c(c);
  TwoModeVerdict v;
  v.positive = positivity_by_q(k);
  v.pure = v.positive && purity2(k);
  v.p_representable = p_representable(k);
  if (v.positive) {
    v.ppt_separable = ppt_separable(k);
    ThermalPair g = thermal_pair(k, ThermalMode::Diagnostic);
    // Boundary kernels can land a hair below zero.
    if (g.g2 < 0.0 && g.g2 > -1e-6) g.g2 = 0.0;
    if (g.g1 < 0.0 && g.g1 > -1e-6) g.g1 = 0.0;
    v.thermal = g;
  }
  return v;
}

}  // namespace gauss::twomode
