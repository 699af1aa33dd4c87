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

#include "gauss/kernel.hpp"
#include "gauss/twomode.hpp"

namespace gauss::states {

/// Mixed EPR family: n1 = n2 = n, real mc, everything else zero.
GaussianKernel mixed_epr(double n, double mc);

/// Mixed EPR plus real anti-EPR correlations ms.
GaussianKernel anti_epr(double n, double mc, double ms);

/// Mixed EPR plus equal real single-mode squeezing m1 = m2 = m.
GaussianKernel squeezed_epr(double n, double mc, double m);

/// Closed-form criteria for the three families, used for scans and cross-checks.
namespace closed_form {
bool mixed_epr_positive(double n, double mc);
bool mixed_epr_separable(double n, double mc);
bool anti_epr_positive(double n, double mc, double ms);
bool anti_epr_separable(double n, double mc, double ms);
bool squeezed_epr_positive(double n, double mc, double m);
bool squeezed_epr_separable(double n, double mc, double m);

/// Left-hand sides of the inequalities above (>= 0 means satisfied).
double anti_epr_positivity_lhs(double n, double mc, double ms);
double anti_epr_separability_lhs(double n, double mc, double ms);
double squeezed_epr_positivity_lhs(double n, double mc, double m);
double squeezed_epr_separability_lhs(double n, double mc, double m);
}  // namespace closed_form

/// Local squeezing parameter that balances both P-representability conditions
/// of an anti-EPR kernel:
///   e^{4 theta} = (n + 1/2 - |mc + ms|) / (n + 1/2 - |mc - ms|).
/// Throws NotAState when either factor is non-positive.
double anti_epr_p_rep_theta(double n, double mc, double ms);

/// P-representability of the locally squeezed anti-EPR kernel at `theta`:
///   n + 1/2 - e^{2 theta}/2 >= |mc + ms|  and  n + 1/2 - e^{-2 theta}/2 >= |mc - ms|.
bool anti_epr_p_rep_conditions(double n, double mc, double ms, double theta);

/// Bohr-variable variance sums (<P1^2> + <Q2^2>, <P2^2> + <Q1^2>) with
/// Q_{1,2} = (q1 -+ q2)/sqrt 2, P_{1,2} = (p1 -+ p2)/sqrt 2. The separability
/// test "both >= 1" is only meaningful for the mixed EPR family.
std::array<double, 2> bohr_variance_sums(const GaussianKernel& c);

/// Real two-mode position-space Gaussian exp(-q^T D q / 2), D = [[alpha, gamma], [gamma, beta]].
struct PureStateD {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 0.0;
  double det() const { return alpha * beta - gamma * gamma; }
};

/// Ket parameters of the D state: |Psi> = (det Q)^{1/4} exp(-mu1 a1^dag^2 / 2 - mu2 a2^dag^2 / 2 - muc a1^dag a2^dag)|0,0>.
struct PureKetParams {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double muc = 0.0;
  double det_q = 1.0;
};

/// C matrix of the pure state with position wave function given by D.
/// Throws InvalidD when D is not positive definite.
GaussianKernel pure_from_d(const PureStateD& d);
PureKetParams pure_ket_params(const PureStateD& d);

/// Smoothed EPR state: alpha = beta = 1 + 2 nbar, gamma = -2 sqrt(nbar (nbar + 1)).
struct SmoothedEprParam {
  double nbar = 0.0;
  PureStateD to_d() const;
};

/// pi^{-1/2} exp(-(nbar + 1/2)(q1^2 + q2^2) + 2 sqrt(nbar (nbar + 1)) q1 q2).
double epr_wavefunction(const SmoothedEprParam& p, double q1, double q2);

struct BellShift {
  cplx z0 = 0.0;
};

/// Exponent coefficients of the continuous Bell ket
///   exp(c0 + c_a2 a2^dag + c_a1 a1^dag + c_a1a2 a1^dag a2^dag)|0,0>
/// and the two phase-space points carrying its singular Wigner function.
struct BellParameters {
  cplx c0 = 0.0;
  cplx c_a2dag = 0.0;
  cplx c_a1dag = 0.0;
  cplx c_a1dag_a2dag = 1.0;
  cplx support_z1 = 0.0;
  cplx support_z2 = 0.0;
};

BellParameters bell_parameters(const BellShift& s);

}  // namespace gauss::states
