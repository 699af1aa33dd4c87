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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauss/error.hpp"
#include "gauss/fock.hpp"
#include "gauss/states.hpp"
#include "oracles.hpp"

using namespace gauss;
using namespace gauss::fock;
using linalg::CMatrix;
using linalg::SymMatrix;

namespace {

GaussianKernel c_kernel(const CMatrix& m) { return GaussianKernel(Kind::C, SymMatrix(m)); }

// Q kernel straight from a moment matrix, so singular C is allowed.
GaussianKernel q_from_moments(const CMatrix& c) {
  return GaussianKernel(Kind::Q, SymMatrix(oracle::from_eigen(oracle::q_of(oracle::to_eigen(c)))));
}

double min_eig(const FockOperator& f) { return spectrum(f).back(); }

}  // namespace

TEST_CASE("vacuum") {
  const FockOperator f = from_kernel(c_kernel(0.5 * CMatrix::identity(2)), 8);
  CHECK(f.dim() == 9);
  CHECK(std::abs(f(0, 0) - 1.0) < 1e-15);
  CHECK(f.truncation_loss() < 1e-15);
  const auto s = spectrum(f);
  CHECK(s.front() == doctest::Approx(1.0));
  CHECK(std::abs(s.back()) < 1e-15);
  for (int k : {1, 2, 4}) CHECK(trace_power(f, k) == doctest::Approx(1.0));
  CHECK(std::abs(parity_trace(f) - 2.0) < 1e-12);

  const FockOperator f2 = from_kernel(c_kernel(0.5 * CMatrix::identity(4)), 5);
  CHECK(f2.dim() == 36);
  CHECK(std::abs(f2(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(f2.entries().sum() - 1.0) < 1e-15);
}

TEST_CASE("thermal diagonal") {
  // n = 0.5 is g = 1/3.
  const FockOperator f = from_kernel(onemode::build_c({0.5, 0.0}));
  for (int k = 0; k <= f.cutoff(); ++k) {
    CHECK(std::abs(f(k, k).real() - (2.0 / 3.0) * std::pow(1.0 / 3.0, k)) < 1e-8);
    for (int j = 0; j <= f.cutoff(); ++j)
      if (j != k) CHECK(std::abs(f(j, k)) < 1e-15);
  }
  CHECK(f.truncation_loss() == doctest::Approx(std::pow(1.0 / 3.0, 17)).epsilon(1e-6));
}

TEST_CASE("cutoff errors") {
  const GaussianKernel c = onemode::build_c({0.5, 0.0});
  CHECK_THROWS_AS(from_kernel(c, 3), Error);
  try {
    from_kernel(onemode::build_c({3.0, 0.0}), 8);
    FAIL("expected CutoffTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CutoffTooSmall);
  }
  CHECK_THROWS_AS(partial_transpose_fock(from_kernel(c)), Error);
  CHECK_THROWS_AS(FockOperator(1, 4, Eigen::MatrixXcd::Identity(4, 4)), Error);
}

TEST_CASE("pure squeezed state is a projector") {
  const GaussianKernel c = onemode::build_c({1.0, std::sqrt(2.0)});
  for (int cutoff : {50, 60}) {
    const FockOperator f = from_kernel(c, cutoff);
    const auto s = spectrum(f);
    CHECK(std::abs(s[0] - 1.0) < 1e-6);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(std::abs(s[i]) < 1e-6);
    // Odd occupations are empty.
    for (int k = 1; k <= cutoff; k += 2) CHECK(std::abs(f(k, k)) < 1e-15);
  }
}

TEST_CASE("product thermal spectrum") {
  const FockOperator f = from_kernel(twomode::thermal_product({0.5, 1.0 / 3.0}), 24);
  const auto s = spectrum(f);
  CHECK(s[0] == doctest::Approx(1.0 / 3.0));
  CHECK(s[1] == doctest::Approx(1.0 / 6.0));  // (1 - g1)(1 - g2) g1
  const auto pt = spectrum(partial_transpose_fock(f));
  for (std::size_t i = 0; i < s.size(); ++i) CHECK(std::abs(pt[i] - s[i]) < 1e-14);
}

TEST_CASE("mixed EPR points") {
  // Singular C: the tails are heavy, so the loss gate is lifted to look at the spectrum.
  const GaussianKernel bad_q = q_from_moments(oracle::Gen::moments_matrix({0.5, 0.5, 0.0, 0.0, 0.0, 1.0}));
  CHECK_THROWS_AS(from_kernel(bad_q, 12), Error);
  CHECK(min_eig(from_kernel(bad_q, 12, 1.0)) < -1e-4);

  const FockOperator ent = from_kernel(states::mixed_epr(0.8, 1.0));
  CHECK(min_eig(ent) > -1e-6);
  CHECK(min_eig(partial_transpose_fock(ent)) < -1e-4);

  const FockOperator sep = from_kernel(states::mixed_epr(1.2, 1.0), 16, 2e-3);
  CHECK(min_eig(sep) > -1e-6);
  CHECK(min_eig(partial_transpose_fock(sep)) >= -1e-6);
}

TEST_CASE("partial transpose matches the transformed kernel") {
  oracle::Gen gen(81);
  for (int i = 0; i < 10; ++i) {
    auto p = gen.two_mode();
    p.n1 *= 0.4;
    p.n2 *= 0.4;
    const CMatrix m = oracle::Gen::moments_matrix(p);
    if (oracle::min_eig(oracle::to_eigen(m)) < 1e-3) continue;
    const GaussianKernel c = c_kernel(m);
    const FockOperator f = from_kernel(c, 10, 1e-2);
    const FockOperator g = from_kernel(twomode::partial_transpose(convert(c, Kind::Q)), 10, 1e-2);
    CHECK((partial_transpose_fock(f).entries() - g.entries()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("trace powers") {
  const FockOperator f = from_kernel(onemode::build_c({1.0, 0.0}), 40);
  CHECK(std::abs(trace_power(f, 2) - 1.0 / 3.0) < 1e-10);
  CHECK(std::abs(trace_power(f, 4) - 1.0 / 15.0) < 1e-10);

  oracle::Gen gen(82);
  for (int i = 0; i < 20; ++i) {
    auto p = gen.two_mode();
    p.n1 *= 0.5;
    p.n2 *= 0.5;
    const CMatrix m = oracle::Gen::moments_matrix(p);
    if (oracle::min_eig(oracle::to_eigen(m)) < 1e-3) continue;
    const GaussianKernel c = c_kernel(m);
    FockOperator fk = from_kernel(c, 16, 1.0);
    const double loss = fk.truncation_loss();
    if (loss > 1e-6) continue;
    CHECK(std::abs(trace_power(fk, 2) - twomode::trace_g2(c)) < 1e-6);
    CHECK(std::abs(trace_power(fk, 4) - twomode::trace_g4(c)) < 1e-6);
  }
}

TEST_CASE("unit trace and purity without positivity") {
  const FockOperator f = from_kernel(twomode::thermal_product({1.0 / 3.0, -1.0 / 3.0}), 24);
  CHECK(std::abs(trace_power(f, 1) - 1.0) < 1e-10);
  CHECK(std::abs(trace_power(f, 2) - 1.0) < 1e-10);
  const double low = min_eig(f);
  CHECK(low < -0.1);
  CHECK(sign_of(low) == SignVerdict::Negative);
}

TEST_CASE("moments and parity") {
  oracle::Gen gen(83);
  int used = 0;
  for (int i = 0; i < 80; ++i) {
    auto p = gen.two_mode();
    p.n1 *= 0.25;
    p.n2 *= 0.25;
    const CMatrix m = oracle::Gen::moments_matrix(p);
    if (oracle::min_eig(oracle::to_eigen(m)) < 1e-3) continue;
    const GaussianKernel c = c_kernel(m);
    // Moments and parity are only as good as the truncation.
    const FockOperator f = from_kernel(c, 16, 1.0);
    if (f.truncation_loss() > 1e-8) continue;
    ++used;
    const twomode::TwoModeMoments got = two_mode_moments(f);
    const twomode::TwoModeMoments want = twomode::moments_of(c);
    CHECK(std::abs(got.n1 - want.n1) < 1e-5);
    CHECK(std::abs(got.n2 - want.n2) < 1e-5);
    CHECK(std::abs(got.m1 - want.m1) < 1e-5);
    CHECK(std::abs(got.m2 - want.m2) < 1e-5);
    CHECK(std::abs(got.ms - want.ms) < 1e-5);
    CHECK(std::abs(got.mc - want.mc) < 1e-5);
    const double w0 = std::sqrt(linalg::determinant(convert(c, Kind::W).matrix().mat()).real());
    // Trace loss only bounds the tail of a positive operator.
    if (twomode::positivity_by_q(c)) CHECK(std::abs(parity_trace(f) - w0) < 1e-5);
  }
  CHECK(used >= 10);

  for (int i = 0; i < 20; ++i) {
    auto [n, mm] = gen.one_mode();
    const GaussianKernel c = onemode::build_c({0.5 * n, 0.5 * mm});
    const FockOperator f = from_kernel(c, 60, 1.0);
    if (f.truncation_loss() > 1e-12) continue;
    const onemode::OneModeMoments got = one_mode_moments(f);
    CHECK(std::abs(got.n - 0.5 * n) < 1e-6);
    CHECK(std::abs(got.m - 0.5 * mm) < 1e-6);
  }
}

TEST_CASE("sign rule") {
  CHECK(sign_of(0.0) == SignVerdict::NonNegative);
  CHECK(sign_of(-1e-10) == SignVerdict::NonNegative);
  CHECK(sign_of(-1e-6) == SignVerdict::Indeterminate);
  CHECK(sign_of(-1e-4) == SignVerdict::Negative);
  bool ind = false;
  CHECK(agrees(true, 0.1, &ind));
  CHECK_FALSE(ind);
  CHECK_FALSE(agrees(true, -1e-3, &ind));
  CHECK(agrees(false, -1e-3, &ind));
  CHECK_FALSE(ind);
  CHECK(agrees(false, 1e-3, &ind));
  CHECK(ind);
}

TEST_CASE("random kernels agree with the analytic verdicts") {
  oracle::Gen gen(84);
  int compared = 0;
  int negative = 0;
  int ppt_negative = 0;
  int dead = 0;
  int skipped = 0;
  for (int i = 0; i < 80; ++i) {
    const GaussianKernel c = gen.oracle_kernel();
    FockOperator f(1, 4, Eigen::MatrixXcd::Zero(5, 5));
    try {
      f = from_kernel(c);
    } catch (const Error&) {
      ++skipped;
      continue;
    }
    const bool two = c.modes() == 2;
    const bool pos = two ? twomode::positivity_by_q(c) : onemode::classify(onemode::moments_of(c)).positive;
    bool ind = false;
    CHECK(agrees(pos, min_eig(f), &ind));
    if (ind) ++dead;
    if (!pos && !ind) ++negative;
    if (two && pos) {
      const bool sep = twomode::ppt_separable(c);
      CHECK(agrees(sep, min_eig(partial_transpose_fock(f)), &ind));
      if (ind) ++dead;
      if (!sep && !ind) ++ppt_negative;
    }
    ++compared;
  }
  CHECK(compared >= 60);
  CHECK(negative > 5);
  CHECK(ppt_negative > 5);
  MESSAGE("indeterminate: " << dead << ", cutoff too small: " << skipped);
}
