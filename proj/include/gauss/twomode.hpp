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
#include "gauss/onemode.hpp"

namespace gauss::twomode {

inline constexpr double kBoundaryTol = 1e-10;

/// n_i = <a_i^dag a_i>, m_i = -<a_i^2>, ms = <a_1 a_2^dag>, mc = -<a_1 a_2>.
struct TwoModeMoments {
  double n1 = 0.0;
  double n2 = 0.0;
  cplx m1 = 0.0;
  cplx m2 = 0.0;
  cplx ms = 0.0;
  cplx mc = 0.0;
};

/// Slots of the two-mode Q matrix, laid out like C with (1 - nu_i) on the diagonal.
struct NormalOrderParams2 {
  double nu1 = 0.0;
  double nu2 = 0.0;
  cplx mu1 = 0.0;
  cplx mu2 = 0.0;
  cplx mus = 0.0;
  cplx muc = 0.0;
};

/// Parameters of the product of basic Gaussians (1-g1) g1^{n1} (1-g2) g2^{n2}
/// that a two-mode kernel is unitarily equivalent to. Ordered g1 >= g2.
struct ThermalPair {
  double g1 = 0.0;
  double g2 = 0.0;
};

struct TwoModeVerdict {
  bool positive = false;
  bool pure = false;
  bool p_representable = false;
  std::optional<bool> ppt_separable;  // defined only for positive kernels
  std::optional<ThermalPair> thermal;  // present iff positive
};

/// Which of the two determinant inequalities hold. The right one is g1 g2 >= 0,
/// the left one (g1 + g2)(1 + g1)(1 + g2) >= (g1 - g2)^2.
struct DetDiagnostic {
  double det_c = 0.0;
  double det_cbar = 0.0;
  double cross = 0.0;  // 4 sqrt(det C) sqrt(det Cbar)
  bool left_ok = false;
  bool right_ok = false;
};

/// Assembles C from the moments. Throws NotAState unless positive definite.
GaussianKernel build_c2(const TwoModeMoments& p);
TwoModeMoments moments_of(const GaussianKernel& c);

/// Block-diagonal kernel of the basic product Gaussian with the given g's.
GaussianKernel thermal_product(const ThermalPair& g);

/// Tr G^2 = 1 / (4 sqrt(det C)).
double trace_g2(const GaussianKernel& c);
/// Tr G^4 = (Tr G^2)^2 / (4 sqrt(det Cbar)).
double trace_g4(const GaussianKernel& c);

/// Characteristic matrix of G^2 / Tr G^2: Cbar = C/2 + E C^-1 E / 8.
GaussianKernel squared_kernel(const GaussianKernel& c);

DetDiagnostic positivity_diagnostic(const GaussianKernel& c);
bool positivity_by_dets(const GaussianKernel& c);

NormalOrderParams2 normal_order_params(const GaussianKernel& k);

/// nu1 + nu2 >= 0 and nu1 nu2 >= |mus|^2.
bool positivity_by_q(const GaussianKernel& c);

/// Smallest eigenvalue of C + E/2 (uncertainty-relation form of positivity).
double covariance_margin(const GaussianKernel& c);

/// T1 k T1 for a kernel of any kind.
GaussianKernel partial_transpose(const GaussianKernel& k);

/// Positivity of the partial transpose. Throws NotPositive for non-positive k.
bool ppt_separable(const GaussianKernel& c);
/// nu1 nu2 >= |muc|^2 read directly off Q (valid for positive k).
bool ppt_direct(const GaussianKernel& c);

/// All eigenvalues of C - I/2 exceed 1e-12.
bool p_representable(const GaussianKernel& c);

enum class ThermalMode { Strict, Diagnostic };

/// Solves 4 sqrt(det C) = x1 x2 and 4 sqrt(det Cbar) = (x1 + 1/x1)(x2 + 1/x2)/4
/// for x_i = (1+g_i)/(1-g_i). Strict mode throws NotPositive for non-positive
/// kernels; both modes throw NoRealSolution for inconsistent input.
ThermalPair thermal_pair(const GaussianKernel& c, ThermalMode mode = ThermalMode::Strict);

/// det C = 1/16 within 1e-10.
bool purity2(const GaussianKernel& c);

/// For pure kernels: det of the diagonal block `which` (1 or 2) equals 1/4.
/// Throws NotPure.
bool pure_marginal_separability(const GaussianKernel& c, int which);

/// U1 U2 as a 4x4 matrix acting on (a1, a1^dag, a2, a2^dag).
linalg::CMatrix local_map(const onemode::SqueezeMap& u1, const onemode::SqueezeMap& u2);

/// E U E C E U^dag E with U = U1 U2, theta1 = theta2 = theta and zero phases.
/// Throws NotPositive.
GaussianKernel local_squeeze_to_p_rep(const GaussianKernel& c, double theta);

TwoModeVerdict classify(const GaussianKernel& c);

}  // namespace gauss::twomode
