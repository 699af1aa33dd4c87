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

// Brute-force verification: a Gaussian kernel rebuilt as a truncated density
// matrix in the Fock basis, independent of the closed-form criteria.

#include <Eigen/Dense>
#include <vector>

#include "gauss/kernel.hpp"
#include "gauss/onemode.hpp"
#include "gauss/twomode.hpp"

namespace gauss::fock {

inline constexpr int kDefaultCutoff = 16;
inline constexpr double kMaxTruncationLoss = 1e-4;
inline constexpr double kDeadBand = 1e-5;

/// Truncated operator on occupations 0..cutoff per mode. Two-mode basis index
/// is n1 * (cutoff + 1) + n2.
class FockOperator {
 public:
  FockOperator(int modes, int cutoff, Eigen::MatrixXcd entries);

  int modes() const noexcept { return modes_; }
  int cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  cplx operator()(int row, int col) const { return entries_(row, col); }

  /// |1 - Tr F|.
  double truncation_loss() const;

 private:
  int modes_;
  int cutoff_;
  Eigen::MatrixXcd entries_;
};

/// Matrix elements <m|G|n> of G = sqrt(det Q) :exp(-a^dag Q a / 2): from the
/// Taylor coefficients of the coherent-state generating function
/// sqrt(det Q) exp(x^T T (I - Q) x / 2), x = (beta1, alpha1*, beta2, alpha2*),
/// times sqrt(m! n!). Throws CutoffTooSmall when cutoff < 4 or the truncation
/// loss exceeds max_loss.
FockOperator from_kernel(const GaussianKernel& k, int cutoff = kDefaultCutoff,
                         double max_loss = kMaxTruncationLoss);

/// Eigenvalues, descending.
std::vector<double> spectrum(const FockOperator& f);

/// <m1 m2|F^T1|n1 n2> = <n1 m2|F|m1 n2>. Throws WrongModeCount for one mode.
FockOperator partial_transpose_fock(const FockOperator& f);

/// Tr F^k for k in {1, 2, 4} (any k >= 1 is accepted).
double trace_power(const FockOperator& f, int k);

/// 2^modes Tr{(-1)^N F}: the Wigner function at the phase-space origin.
double parity_trace(const FockOperator& f);

onemode::OneModeMoments one_mode_moments(const FockOperator& f);
twomode::TwoModeMoments two_mode_moments(const FockOperator& f);

enum class SignVerdict { NonNegative, Negative, Indeterminate };

/// Compares a closed-form positivity verdict with the smallest truncated
/// eigenvalue. A truncated positive operator stays positive, so a negative
/// eigenvalue below -dead_band contradicts `analytic_positive`; an
/// analytically negative kernel whose smallest eigenvalue is within the dead
/// band is indeterminate at this cutoff.
SignVerdict sign_of(double min_eigenvalue, double dead_band = kDeadBand);
bool agrees(bool analytic_positive, double min_eigenvalue, bool* indeterminate = nullptr,
            double dead_band = kDeadBand);

}  // namespace gauss::fock
