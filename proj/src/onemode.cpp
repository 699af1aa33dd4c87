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

#include "gauss/onemode.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gauss/error.hpp"

namespace gauss::onemode {

using linalg::CMatrix;
using linalg::Structure;
using linalg::SymMatrix;

namespace {

void require_exists(const OneModeMoments& p) {
  if (!(p.n + 0.5 > std::abs(p.m))) {
    throw Error(ErrorKind::NotAState,
                "n + 1/2 = " + std::to_string(p.n + 0.5) + " <= |m| = " + std::to_string(std::abs(p.m)));
  }
}

void require_one_mode(const GaussianKernel& k) {
  if (k.modes() != 1) throw Error(ErrorKind::WrongModeCount, "expected a one-mode kernel");
}

void require_positive(const OneModeMoments& p) {
  require_exists(p);
  if (!classify(p).positive) throw Error(ErrorKind::NotPositive, "n(n+1) < |m|^2");
}

}  // namespace

GaussianKernel build_c(const OneModeMoments& p) {
  require_exists(p);
  const double d = p.n + 0.5;
  return GaussianKernel(Kind::C, SymMatrix(CMatrix(2, {d, p.m, std::conj(p.m), d})));
}

OneModeMoments moments_of(const GaussianKernel& c) {
  require_one_mode(c);
  if (c.kind() != Kind::C) return moments_of(convert(c, Kind::C));
  return {c(0, 0).real() - 0.5, c(0, 1)};
}

GaussianKernel thermal_kernel(double g) {
  if (!(g > -1.0 && g < 1.0)) throw Error(ErrorKind::NotAState, "g must lie in (-1, 1)");
  const double d = 0.5 * (1.0 + g) / (1.0 - g);
  return GaussianKernel(Kind::C, SymMatrix(CMatrix::diagonal({d, d})));
}

OneModeVerdict classify(const OneModeMoments& p) {
  require_exists(p);
  const double m2 = std::norm(p.m);
  const double det_c = (p.n + 0.5) * (p.n + 0.5) - m2;

  OneModeVerdict v;
  v.positive = p.n * (p.n + 1.0) >= m2 - kBoundaryTol;
  v.pure = v.positive && std::abs(det_c - 0.25) <= kBoundaryTol;
  v.p_representable = p.n > std::abs(p.m);
  if (v.positive) {
    const double s = std::sqrt(det_c);
    v.g = std::max(0.0, (s - 0.5) / (s + 0.5));
  }
  return v;
}

bool positive_by_covariance(const OneModeMoments& p) {
  const GaussianKernel c = build_c(p);
  const CMatrix shifted = c.matrix().mat() + 0.5 * linalg::structure_matrix(Structure::E, 2);
  return linalg::eigenvalues_hermitian(shifted).front() >= -1e-12;
}

NormalOrderParams normal_order_params(const GaussianKernel& k) {
  require_one_mode(k);
  const GaussianKernel q = convert(k, Kind::Q);
  return {1.0 - q(0, 0).real(), q(0, 1)};
}

double purity_from_wigner(const GaussianKernel& w) {
  require_one_mode(w);
  const GaussianKernel ww = convert(w, Kind::W);
  return 0.5 * std::sqrt(linalg::determinant(ww.matrix().mat()).real());
}

SqueezeMap::SqueezeMap(double theta, double phi, double varphi)
    : theta_(theta), phi_(phi), varphi_(varphi), u_(2) {
  const double ch = std::cosh(theta);
  const double sh = std::sinh(theta);
  u_(0, 0) = std::polar(ch, phi);
  u_(0, 1) = std::polar(sh, varphi);
  u_(1, 0) = std::polar(sh, -varphi);
  u_(1, 1) = std::polar(ch, -phi);
}

GaussianKernel apply_squeeze(const GaussianKernel& c, const SqueezeMap& u, Direction dir) {
  require_one_mode(c);
  const CMatrix cm = convert(c, Kind::C).matrix().mat();
  const CMatrix& um = u.matrix();
  if (dir == Direction::Forward) {
    return GaussianKernel(Kind::C, SymMatrix(um.adjoint() * cm * um));
  }
  const CMatrix e = linalg::structure_matrix(Structure::E, 2);
  const CMatrix eue = e * um * e;
  return GaussianKernel(Kind::C, SymMatrix(eue * cm * eue.adjoint()));
}

ThetaWindow theta_window(const OneModeMoments& p) {
  require_positive(p);
  const double am = std::abs(p.m);
  const double c = p.n + 0.5;
  ThetaWindow w;
  w.lo = 0.5 * std::log(1.0 / (2.0 * p.n + 1.0 - 2.0 * am));
  w.hi = 0.5 * std::log(2.0 * p.n + 1.0 + 2.0 * am);
  w.theta0 = 0.25 * std::log((c + am) / (c - am));
  return w;
}

OneModeMoments p_rep_moments(const OneModeMoments& p, double theta) {
  require_exists(p);
  const double am = std::abs(p.m);
  const double c = p.n + 0.5;
  const double ch = std::cosh(2.0 * theta);
  const double sh = std::sinh(2.0 * theta);
  const double phase = am > 0.0 ? -std::arg(p.m) : 0.0;
  return {c * ch - am * sh - 0.5, std::polar(am * ch - c * sh, phase)};
}

SqueezeMap diagonalizing_squeeze(const OneModeMoments& p) {
  require_positive(p);
  if (std::abs(p.m) <= 1e-14) return SqueezeMap::identity();
  return SqueezeMap(theta_window(p).theta0, -std::arg(p.m), 0.0);
}

double SqueezedWavefunction::operator()(double q) const {
  return std::pow(kappa / std::numbers::pi, 0.25) * std::exp(-0.5 * kappa * q * q);
}

SqueezedWavefunction squeezed_wavefunction(const OneModeMoments& p) {
  require_exists(p);
  const double m2 = std::norm(p.m);
  if (std::abs((p.n + 0.5) * (p.n + 0.5) - m2 - 0.25) > kBoundaryTol) {
    throw Error(ErrorKind::NotPure, "|m| != sqrt(n(n+1))");
  }
  if (p.m.imag() != 0.0 || p.m.real() < 0.0) {
    throw Error(ErrorKind::NotRealBranch, "m must be real and non-negative");
  }
  SqueezedWavefunction psi;
  psi.mu = std::sqrt(p.n / (p.n + 1.0));
  psi.kappa = (1.0 + psi.mu) / (1.0 - psi.mu);
  return psi;
}

}  // namespace gauss::onemode
