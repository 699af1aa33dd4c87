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

#include "gauss/kernel.hpp"

#include <string>

#include "gauss/error.hpp"

namespace gauss {

using linalg::CMatrix;
using linalg::Structure;
using linalg::SymMatrix;

std::string_view to_string(Kind kind) {
  switch (kind) {
    case Kind::C: return "C";
    case Kind::W: return "W";
    case Kind::Q: return "Q";
    case Kind::P: return "P";
  }
  return "?";
}

Kind kind_from_string(std::string_view s) {
  if (s == "C") return Kind::C;
  if (s == "W") return Kind::W;
  if (s == "Q") return Kind::Q;
  if (s == "P") return Kind::P;
  throw std::invalid_argument("unknown kernel kind '" + std::string(s) + "'");
}

namespace {

bool positive_definite(const SymMatrix& m) { return linalg::eigenvalues_hermitian(m).front() > 1e-12; }

CMatrix half_identity(int dim) { return 0.5 * CMatrix::identity(dim); }

CMatrix sandwich_e(const CMatrix& m) {
  const CMatrix e = linalg::structure_matrix(Structure::E, m.dim());
  return e * m * e;
}

SymMatrix to_c(const GaussianKernel& k) {
  const CMatrix& m = k.matrix().mat();
  const int d = m.dim();
  switch (k.kind()) {
    case Kind::C: return k.matrix();
    case Kind::W: return SymMatrix(sandwich_e(linalg::inverse(m)));
    case Kind::Q: return SymMatrix(sandwich_e(linalg::inverse(m)) - half_identity(d));
    case Kind::P: return SymMatrix(sandwich_e(linalg::inverse(m)) + half_identity(d));
  }
  return k.matrix();
}

}  // namespace

GaussianKernel::GaussianKernel(Kind kind, SymMatrix matrix) : kind_(kind), matrix_(std::move(matrix)) {
  switch (kind_) {
    case Kind::C:
    case Kind::W:
      if (!positive_definite(matrix_)) {
        throw Error(ErrorKind::NotAState, std::string(to_string(kind_)) + " matrix is not positive definite");
      }
      break;
    case Kind::P:
      if (!positive_definite(matrix_)) {
        throw Error(ErrorKind::NotPRepresentable, "P matrix is not positive definite");
      }
      break;
    case Kind::Q:
      break;
  }
}

GaussianKernel convert(const GaussianKernel& k, Kind target) {
  if (k.kind() == target) return k;
  const SymMatrix c = to_c(k);
  const int d = c.dim();
  switch (target) {
    case Kind::C: return GaussianKernel(Kind::C, c);
    case Kind::W: return GaussianKernel(Kind::W, SymMatrix(sandwich_e(linalg::inverse(c.mat()))));
    case Kind::Q:
      return GaussianKernel(Kind::Q, SymMatrix(sandwich_e(linalg::inverse(c.mat() + half_identity(d)))));
    case Kind::P: {
      const SymMatrix shifted(c.mat() - half_identity(d));
      if (!positive_definite(shifted)) {
        throw Error(ErrorKind::NotPRepresentable, "C - I/2 has a non-positive eigenvalue");
      }
      return GaussianKernel(Kind::P, SymMatrix(sandwich_e(linalg::inverse(shifted.mat()))));
    }
  }
  return k;
}

double p_margin(const GaussianKernel& c) {
  const SymMatrix cc = to_c(c);
  return linalg::eigenvalues_hermitian(cc.mat() - half_identity(cc.dim())).front();
}

SymMatrix parity_operator_q(int modes) { return SymMatrix(half_identity(2 * modes)); }

}  // namespace gauss
