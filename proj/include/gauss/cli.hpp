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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gauss/kernel.hpp"

namespace gauss::cli {

enum ExitCode : int {
  kOk = 0,
  kNotAState = 2,
  kSingular = 3,
  kNotPRepresentable = 4,
  kOracleDisagree = 5,
  kCutoff = 6,
  kUsage = 64,
};

/// Runs `gausstool <args...>` in-process. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Family { MixedEpr, AntiEpr, SqueezedEpr };

/// Accepts "mixed-epr" and "mixed_epr" spellings. Throws std::invalid_argument.
Family family_from_string(std::string_view s);

/// Plane scan of a two-mode family: ms = ratio * mc (anti-EPR) or
/// m = ratio * mc (squeezed EPR); ratio is ignored for mixed EPR.
struct ScanRequest {
  Family family = Family::MixedEpr;
  double ratio = 0.0;
  double mc_lo = 0.0;
  double mc_hi = 2.0;
  int mc_steps = 201;
  double n_lo = 0.0;
  double n_hi = 2.0;
  int n_steps = 201;

  /// Throws std::invalid_argument unless steps >= 2 and ranges are finite and increasing.
  void validate() const;
  double mc_at(int i) const;
  double n_at(int j) const;
};

/// Flags of one cell. Points that are not states (C not positive definite)
/// have every flag false.
struct ScanCell {
  double mc = 0.0;
  double n = 0.0;
  bool positive = false;
  bool pure = false;
  bool separable = false;
  bool p_representable = false;
};

/// Cells in row order: mc outer, n inner. The result does not depend on `threads`.
std::vector<ScanCell> scan(const ScanRequest& r, int threads = 1);

/// Header `mc,n,positive,pure,separable,p_representable`, LF line endings.
std::string scan_csv(const std::vector<ScanCell>& cells);

/// {"modes":1|2, "kind":"C|W|Q|P", "matrix":[[re,im],...]} row-major.
std::string kernel_to_json(const GaussianKernel& k);

/// Throws std::invalid_argument on malformed input; kernel validation errors
/// propagate as gauss::Error.
GaussianKernel kernel_from_json(std::string_view text);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

}  // namespace gauss::cli
