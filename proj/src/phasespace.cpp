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

#include "gauss/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gauss/error.hpp"

namespace gauss::phasespace {

using linalg::CMatrix;
using linalg::SymMatrix;

PhasePoint PhasePoint::one(double q, double p) {
  PhasePoint pt;
  pt.modes_ = 1;
  pt.qp_ = {q, p, 0.0, 0.0};
  return pt;
}

PhasePoint PhasePoint::two(double q1, double p1, double q2, double p2) {
  PhasePoint pt;
  pt.modes_ = 2;
  pt.qp_ = {q1, p1, q2, p2};
  return pt;
}

PhasePoint PhasePoint::from_z(cplx z) { return one(std::sqrt(2.0) * z.real(), std::sqrt(2.0) * z.imag()); }

PhasePoint PhasePoint::from_z(cplx z1, cplx z2) {
  const double r = std::sqrt(2.0);
  return two(r * z1.real(), r * z1.imag(), r * z2.real(), r * z2.imag());
}

cplx PhasePoint::z(int mode) const { return cplx(q(mode), p(mode)) / std::sqrt(2.0); }

std::vector<cplx> PhasePoint::vector() const {
  std::vector<cplx> v;
  for (int i = 0; i < modes_; ++i) {
    v.push_back(z(i));
    v.push_back(std::conj(z(i)));
  }
  return v;
}

GridSpec::GridSpec(Axis x_axis, Axis y_axis) : x(x_axis), y(y_axis) {
  for (const Axis& a : {x, y}) {
    if (!(std::isfinite(a.lo) && std::isfinite(a.hi) && a.lo < a.hi)) {
      throw std::invalid_argument("grid axis needs finite lo < hi");
    }
    if (a.samples < 2) throw std::invalid_argument("grid axis needs at least 2 samples");
  }
}

namespace {

double quadratic_form(const CMatrix& m, const std::vector<cplx>& v) {
  cplx acc = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) acc += std::conj(v[static_cast<std::size_t>(i)]) * m(i, j) * v[static_cast<std::size_t>(j)];
  return acc.real();
}

void require_same_modes(const GaussianKernel& k, const PhasePoint& pt) {
  if (k.modes() != pt.modes()) throw Error(ErrorKind::WrongModeCount, "phase point and kernel mode counts differ");
}

void require_one_mode(const GaussianKernel& k) {
  if (k.modes() != 1) throw Error(ErrorKind::WrongModeCount, "expected a one-mode kernel");
}

}  // namespace

GridSpec default_grid(const GaussianKernel& one_mode) {
  require_one_mode(one_mode);
  const GaussianKernel c = convert(one_mode, Kind::C);
  const double n_half = c(0, 0).real();
  const double re_m = c(0, 1).real();
  const double sigma = std::sqrt(std::max(n_half - re_m, n_half + re_m));
  const Axis a{-kDefaultSigmas * sigma, kDefaultSigmas * sigma, kDefaultSamples};
  return GridSpec(a, a);
}

double wigner_value(const GaussianKernel& k, const PhasePoint& pt) {
  require_same_modes(k, pt);
  const GaussianKernel w = convert(k, Kind::W);
  const double det = linalg::determinant(w.matrix().mat()).real();
  return std::sqrt(det) * std::exp(-0.5 * quadratic_form(w.matrix().mat(), pt.vector()));
}

cplx characteristic_value(const GaussianKernel& k, const PhasePoint& pt) {
  require_same_modes(k, pt);
  const GaussianKernel c = convert(k, Kind::C);
  return std::exp(-0.5 * quadratic_form(c.matrix().mat(), pt.vector()));
}

GaussianKernel reduced_kernel(const GaussianKernel& k, int mode) {
  if (k.modes() != 2) throw Error(ErrorKind::WrongModeCount, "reduction needs a two-mode kernel");
  if (mode != 1 && mode != 2) throw std::invalid_argument("mode must be 1 or 2");
  const GaussianKernel c = convert(k, Kind::C);
  const int o = 2 * (mode - 1);
  const CMatrix block(2, {c(o, o), c(o, o + 1), c(o + 1, o), c(o + 1, o + 1)});
  return GaussianKernel(Kind::C, SymMatrix(block));
}

std::vector<WaveRow> scan_wavefunction(const states::SmoothedEprParam& p, const GridSpec& g) {
  std::vector<WaveRow> rows;
  rows.reserve(static_cast<std::size_t>(g.x.samples) * static_cast<std::size_t>(g.y.samples));
  for (int i = 0; i < g.x.samples; ++i) {
    const double q1 = g.x.at(i);
    for (int j = 0; j < g.y.samples; ++j) {
      const double q2 = g.y.at(j);
      rows.push_back({q1, q2, states::epr_wavefunction(p, q1, q2)});
    }
  }
  return rows;
}

std::vector<WignerRow> wigner_grid(const GaussianKernel& one_mode, const GridSpec& g) {
  require_one_mode(one_mode);
  const GaussianKernel w = convert(one_mode, Kind::W);
  std::vector<WignerRow> rows;
  rows.reserve(static_cast<std::size_t>(g.x.samples) * static_cast<std::size_t>(g.y.samples));
  for (int i = 0; i < g.x.samples; ++i) {
    const double q = g.x.at(i);
    for (int j = 0; j < g.y.samples; ++j) {
      const double p = g.y.at(j);
      rows.push_back({q, p, wigner_value(w, PhasePoint::one(q, p))});
    }
  }
  return rows;
}

double grid_normalization(const GaussianKernel& one_mode, const GridSpec& g) {
  double sum = 0.0;
  for (const WignerRow& r : wigner_grid(one_mode, g)) sum += r.w;
  return sum * g.x.step() * g.y.step() / (2.0 * std::numbers::pi);
}

}  // namespace gauss::phasespace
