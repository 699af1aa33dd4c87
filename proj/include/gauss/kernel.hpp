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

#include <string_view>

#include "gauss/linalg.hpp"

namespace gauss {

/// Which phase-space description a kernel matrix belongs to:
/// characteristic function (C), Wigner function (W), normally ordered
/// operator (Q) or Glauber P function (P).
enum class Kind { C, W, Q, P };

std::string_view to_string(Kind kind);
Kind kind_from_string(std::string_view s);

/// A zero-mean Gaussian operator of one or two modes, described by one of its
/// four equivalent matrices. Kinds C, W and P are validated positive definite
/// on construction (NotAState / NotPRepresentable).
class GaussianKernel {
 public:
  GaussianKernel(Kind kind, linalg::SymMatrix matrix);

  Kind kind() const noexcept { return kind_; }
  int modes() const noexcept { return matrix_.modes(); }
  int dim() const noexcept { return matrix_.dim(); }
  const linalg::SymMatrix& matrix() const noexcept { return matrix_; }
  const cplx& operator()(int i, int j) const { return matrix_(i, j); }

 private:
  Kind kind_;
  linalg::SymMatrix matrix_;
};

/// Representation change through the C matrix:
///   W = E C^-1 E,  Q = E (C + I/2)^-1 E,  P = E (C - I/2)^-1 E
/// and their inverses. Throws SingularMatrix, or NotPRepresentable when
/// C - I/2 is not positive definite and the target is P.
GaussianKernel convert(const GaussianKernel& k, Kind target);

/// Smallest eigenvalue of C - I/2; P-representability needs it > 0.
double p_margin(const GaussianKernel& c);

/// Normally ordered matrix of twice the parity operator, the C -> 0 limit of
/// the family. It is not a valid GaussianKernel (C = 0) and is exposed only as
/// a constant.
linalg::SymMatrix parity_operator_q(int modes = 1);

}  // namespace gauss
