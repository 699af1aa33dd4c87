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

#include <array>
#include <vector>

#include "gauss/kernel.hpp"
#include "gauss/states.hpp"

namespace gauss::phasespace {

/// Real phase-space coordinates of one or two modes, z = (q + i p) / sqrt 2.
class PhasePoint {
 public:
  static PhasePoint one(double q, double p);
  static PhasePoint two(double q1, double p1, double q2, double p2);
  static PhasePoint from_z(cplx z);
  static PhasePoint from_z(cplx z1, cplx z2);

  int modes() const noexcept { return modes_; }
  double q(int mode) const { return qp_.at(static_cast<std::size_t>(2 * mode)); }
  double p(int mode) const { return qp_.at(static_cast<std::size_t>(2 * mode + 1)); }
  cplx z(int mode) const;

  /// (z1, z1*) or (z1, z1*, z2, z2*).
  std::vector<cplx> vector() const;

 private:
  int modes_ = 1;
  std::array<double, 4> qp_{};
};

struct Axis {
  double lo = -1.0;
  double hi = 1.0;
  int samples = 2;

  double step() const { return (hi - lo) / (samples - 1); }
  double at(int i) const { return lo + (hi - lo) * i / (samples - 1); }
};

/// Two-axis grid. Throws std::invalid_argument unless lo < hi and samples >= 2
/// on both axes.
struct GridSpec {
  Axis x;
  Axis y;

  GridSpec(Axis x_axis, Axis y_axis);
};

inline constexpr int kDefaultSamples = 201;
inline constexpr double kDefaultSigmas = 6.0;

/// Square grid of +-6 sigma, 201 samples per axis, sized by the larger of the
/// q and p Wigner variances of a one-mode kernel.
GridSpec default_grid(const GaussianKernel& one_mode);

/// W(z) = sqrt(det W) exp(-z^dag W z / 2). Accepts any kind; WrongModeCount
/// when the point and kernel disagree on the number of modes.
double wigner_value(const GaussianKernel& k, const PhasePoint& pt);

/// exp(-z^dag C z / 2).
cplx characteristic_value(const GaussianKernel& k, const PhasePoint& pt);

/// One-mode C kernel of the given mode (1 or 2) of a two-mode kernel.
GaussianKernel reduced_kernel(const GaussianKernel& k, int mode);

struct WaveRow {
  double q1 = 0.0;
  double q2 = 0.0;
  double psi = 0.0;
};

struct WignerRow {
  double q = 0.0;
  double p = 0.0;
  double w = 0.0;
};

/// Row-major over (x = q1, y = q2): q1 outer, q2 inner.
std::vector<WaveRow> scan_wavefunction(const states::SmoothedEprParam& p, const GridSpec& g);

/// Wigner function of a one-mode kernel on (x = q, y = p), q outer.
std::vector<WignerRow> wigner_grid(const GaussianKernel& one_mode, const GridSpec& g);

/// Riemann sum of W over the grid with measure dq dp / 2pi.
double grid_normalization(const GaussianKernel& one_mode, const GridSpec& g);

}  // namespace gauss::phasespace
