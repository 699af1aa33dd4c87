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

#include <optional>

#include "gauss/kernel.hpp"
#include "gauss/linalg.hpp"

namespace gauss::onemode {

inline constexpr double kBoundaryTol = 1e-10;

/// n = <a^dag a>, m = -<a^2>. A Gaussian exists iff n + 1/2 > |m|.
struct OneModeMoments {
  double n = 0.0;
  cplx m = 0.0;
};

struct OneModeVerdict {
  bool positive = false;
  bool pure = false;
  bool p_representable = false;
  std::optional<double> g;  // thermal parameter, present iff positive
};

/// Entries of the normally ordered matrix Q = [[1-nu, mu], [mu*, 1-nu]].
struct NormalOrderParams {
  double nu = 0.0;
  cplx mu = 0.0;
};

/// C = [[n + 1/2, m], [m*, n + 1/2]]. Throws NotAState when n + 1/2 <= |m|.
GaussianKernel build_c(const OneModeMoments& p);

/// Reads (n, m) back out of a one-mode C kernel.
OneModeMoments moments_of(const GaussianKernel& c);

/// Basic Gaussian (1-g) g^{a^dag a}, i.e. C = (1+g)/(2(1-g)) I, for g in (-1, 1).
/// g < 0 gives a unit-trace but non-positive operator.
GaussianKernel thermal_kernel(double g);

OneModeVerdict classify(const OneModeMoments& p);

/// Positivity through the smallest eigenvalue of C + E/2.
bool positive_by_covariance(const OneModeMoments& p);

NormalOrderParams normal_order_params(const GaussianKernel& k);

/// Tr G^2 = sqrt(det W) / 2 for a W kernel.
double purity_from_wigner(const GaussianKernel& w);

/// Linear mode transformation a -> U a with
///   U = [[e^{i phi} cosh t, e^{i varphi} sinh t], [e^{-i varphi} sinh t, e^{-i phi} cosh t]].
class SqueezeMap {
 public:
  SqueezeMap(double theta, double phi, double varphi);
  static SqueezeMap identity() { return SqueezeMap(0.0, 0.0, 0.0); }

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double varphi() const noexcept { return varphi_; }
  const linalg::CMatrix& matrix() const noexcept { return u_; }

 private:
  double theta_;
  double phi_;
  double varphi_;
  linalg::CMatrix u_;
};

enum class Direction { Forward, Inverse };

/// Forward: C -> U^dag C U. Inverse: C -> E U E C E U^dag E = (U^dag)^-1 C U^-1.
GaussianKernel apply_squeeze(const GaussianKernel& c, const SqueezeMap& u, Direction dir);

struct ThetaWindow {
  double lo = 0.0;
  double hi = 0.0;
  double theta0 = 0.0;
};

/// Range of squeezing parameters theta for which the inverse-direction map
/// (with phases aligned to m) yields a P-representable kernel, plus theta0,
/// the value that removes the anomalous moment entirely. Throws NotPositive.
ThetaWindow theta_window(const OneModeMoments& p);

/// (N, M) after the phase-aligned inverse squeeze by theta, in closed form.
OneModeMoments p_rep_moments(const OneModeMoments& p, double theta);

/// Squeeze map with theta = theta0 and phases phi = -arg(m), varphi = 0, so that
/// apply_squeeze(C, map, Inverse) is diagonal and apply_squeeze of that diagonal
/// kernel in the Forward direction returns C. |m| <= 1e-14 yields the identity
/// map. Throws NotPositive.
SqueezeMap diagonalizing_squeeze(const OneModeMoments& p);

/// Position wave function (kappa/pi)^{1/4} exp(-kappa q^2 / 2) of a pure
/// squeezed state with real amplitude mu = sqrt(n/(n+1)).
struct SqueezedWavefunction {
  double mu = 0.0;
  double kappa = 1.0;
  double operator()(double q) const;
};

/// Throws NotPure unless |m| = sqrt(n(n+1)) within 1e-10, and NotRealBranch
/// unless m is real and non-negative.
SqueezedWavefunction squeezed_wavefunction(const OneModeMoments& p);

}  // namespace gauss::onemode
