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

#include "gauss/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gauss/error.hpp"

namespace gauss::states {

using linalg::CMatrix;
using linalg::SymMatrix;
using twomode::kBoundaryTol;
using twomode::TwoModeMoments;

GaussianKernel mixed_epr(double n, double mc) { return anti_epr(n, mc, 0.0); }

GaussianKernel anti_epr(double n, double mc, double ms) {
  TwoModeMoments p;
  p.n1 = p.n2 = n;
  p.mc = mc;
  p.ms = ms;
  return twomode::build_c2(p);
}

GaussianKernel squeezed_epr(double n, double mc, double m) {
  TwoModeMoments p;
  p.n1 = p.n2 = n;
  p.mc = mc;
  p.m1 = p.m2 = m;
  return twomode::build_c2(p);
}

namespace closed_form {

bool mixed_epr_positive(double n, double mc) { return n * (n + 1.0) - mc * mc >= -kBoundaryTol; }
bool mixed_epr_separable(double n, double mc) { return n - std::abs(mc) >= -kBoundaryTol; }

double anti_epr_positivity_lhs(double n, double mc, double ms) {
  return n * (n + 1.0) - 2.0 * ms * (n + 0.5) + ms * ms - mc * mc;
}
double anti_epr_separability_lhs(double n, double mc, double ms) {
  return n * (n + 1.0) - 2.0 * mc * (n + 0.5) + mc * mc - ms * ms;
}
double squeezed_epr_positivity_lhs(double n, double mc, double m) { return n * (n + 1.0) - (mc + m) * (mc + m); }
double squeezed_epr_separability_lhs(double n, double mc, double m) {
  return n * (n + 1.0) - 2.0 * mc * (n + 0.5) + mc * mc - m * m;
}

bool anti_epr_positive(double n, double mc, double ms) { return anti_epr_positivity_lhs(n, mc, ms) >= -kBoundaryTol; }
bool anti_epr_separable(double n, double mc, double ms) {
  return anti_epr_separability_lhs(n, mc, ms) >= -kBoundaryTol;
}
bool squeezed_epr_positive(double n, double mc, double m) {
  return squeezed_epr_positivity_lhs(n, mc, m) >= -kBoundaryTol;
}
bool squeezed_epr_separable(double n, double mc, double m) {
  return squeezed_epr_separability_lhs(n, mc, m) >= -kBoundaryTol;
}

}  // namespace closed_form

double anti_epr_p_rep_theta(double n, double mc, double ms) {
  const double plus = n + 0.5 - std::abs(mc + ms);
  const double minus = n + 0.5 - std::abs(mc - ms);
  if (!(plus > 0.0 && minus > 0.0)) {
    throw Error(ErrorKind::NotAState, "anti-EPR parameters outside C > 0");
  }
  return 0.25 * std::log(plus / minus);
}

bool anti_epr_p_rep_conditions(double n, double mc, double ms, double theta) {
  const double d = n + 0.5;
  return d - 0.5 * std::exp(2.0 * theta) - std::abs(mc + ms) >= -kBoundaryTol &&
         d - 0.5 * std::exp(-2.0 * theta) - std::abs(mc - ms) >= -kBoundaryTol;
}

std::array<double, 2> bohr_variance_sums(const GaussianKernel& c) {
  const TwoModeMoments p = twomode::moments_of(c);
  const double q1q1 = p.n1 + 0.5 - p.m1.real();
  const double q2q2 = p.n2 + 0.5 - p.m2.real();
  const double p1p1 = p.n1 + 0.5 + p.m1.real();
  const double p2p2 = p.n2 + 0.5 + p.m2.real();
  const double q1q2 = p.ms.real() - p.mc.real();
  const double p1p2 = p.ms.real() + p.mc.real();

  const double bohr_q1 = 0.5 * (q1q1 + q2q2) - q1q2;
  const double bohr_q2 = 0.5 * (q1q1 + q2q2) + q1q2;
  const double bohr_p1 = 0.5 * (p1p1 + p2p2) - p1p2;
  const double bohr_p2 = 0.5 * (p1p1 + p2p2) + p1p2;
  return {bohr_p1 + bohr_q2, bohr_p2 + bohr_q1};
}

namespace {

void require_valid_d(const PureStateD& d) {
  const double root = std::sqrt((d.alpha - d.beta) * (d.alpha - d.beta) + 4.0 * d.gamma * d.gamma);
  if (!(d.alpha + d.beta > root) || !(d.det() > 0.0)) {
    throw Error(ErrorKind::InvalidD, "D must be positive definite");
  }
}

}  // namespace

GaussianKernel pure_from_d(const PureStateD& d) {
  require_valid_d(d);
  const double det = d.det();
  const double a_plus = d.alpha / 4.0 + d.beta / (4.0 * det);
  const double a_minus = d.alpha / 4.0 - d.beta / (4.0 * det);
  const double b_plus = d.beta / 4.0 + d.alpha / (4.0 * det);
  const double b_minus = d.beta / 4.0 - d.alpha / (4.0 * det);
  const double c_minus = d.gamma / 4.0 * (1.0 - 1.0 / det);
  const double c_plus = d.gamma / 4.0 * (1.0 + 1.0 / det);
  const CMatrix c(4, {a_plus,  a_minus, c_minus, c_plus,
                      a_minus, a_plus,  c_plus,  c_minus,
                      c_minus, c_plus,  b_plus,  b_minus,
                      c_plus,  c_minus, b_minus, b_plus});
  return GaussianKernel(Kind::C, SymMatrix(c));
}

PureKetParams pure_ket_params(const PureStateD& d) {
  require_valid_d(d);
  const double det = d.det();
  const double denom = det + d.alpha + d.beta + 1.0;
  PureKetParams k;
  k.mu1 = (det + d.alpha - d.beta - 1.0) / denom;
  k.mu2 = (det - d.alpha + d.beta - 1.0) / denom;
  k.muc = 2.0 * d.gamma / denom;
  k.det_q = 16.0 * det / (denom * denom);
  return k;
}

PureStateD SmoothedEprParam::to_d() const {
  if (!(nbar >= 0.0)) throw Error(ErrorKind::InvalidD, "nbar must be non-negative");
  const double a = 1.0 + 2.0 * nbar;
  return {a, a, -2.0 * std::sqrt(nbar * (nbar + 1.0))};
}

double epr_wavefunction(const SmoothedEprParam& p, double q1, double q2) {
  const double cross = 2.0 * std::sqrt(p.nbar * (p.nbar + 1.0));
  return std::exp(-(p.nbar + 0.5) * (q1 * q1 + q2 * q2) + cross * q1 * q2) / std::sqrt(std::numbers::pi);
}

BellParameters bell_parameters(const BellShift& s) {
  BellParameters b;
  b.c0 = -0.5 * std::norm(s.z0);
  b.c_a2dag = std::conj(s.z0);
  b.c_a1dag = -s.z0;
  b.c_a1dag_a2dag = 1.0;
  b.support_z1 = s.z0;
  b.support_z2 = -std::conj(s.z0);
  return b;
}

}  // namespace gauss::states
