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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <json.hpp>
#include <sstream>

#include "gauss/cli.hpp"
#include "gauss/onemode.hpp"
#include "gauss/phasespace.hpp"
#include "gauss/states.hpp"

using namespace gauss;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("gauss_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string* header = nullptr) {
  std::istringstream is(text);
  std::string line;
  std::getline(is, line);
  if (header) *header = line;
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("classify") {
  Result r = run({"classify", "--modes", "1", "--n", "1", "--m", "0"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["exists"] == true);
  CHECK(j["positive"] == true);
  CHECK(j["g"].get<double>() == doctest::Approx(0.5));
  CHECK(j["separable"].is_null());
  CHECK(j["trace_g2"].get<double>() == doctest::Approx(1.0 / 3.0));

  r = run({"classify", "--modes", "2", "--family", "mixed-epr", "--n", "0.8", "--mc", "1"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["positive"] == true);
  CHECK(j["separable"] == false);
  CHECK(j["g"].size() == 2);

  r = run({"classify", "--modes", "1", "--n", "0", "--m", "2"});
  CHECK(r.code == cli::kNotAState);
  CHECK(json::parse(r.out)["exists"] == false);
  CHECK_FALSE(r.err.empty());

  r = run({"classify", "--modes", "1", "--n", "0.5", "--m", "0.3+0.4i"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["positive"] == true);
  CHECK(j["pure"] == false);

  // g1 = 1/3, g2 = -1/3: unit trace and purity, not positive.
  r = run({"classify", "--modes", "2", "--g1", "0.3333333333333333", "--g2", "-0.3333333333333333"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["positive"] == false);
  CHECK(j["separable"].is_null());
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"classify", "--modes", "3"}).code == cli::kUsage);
  CHECK(run({"classify", "--bogus"}).code == cli::kUsage);
  CHECK(run({"classify", "--modes", "2", "--family", "nope", "--n", "1"}).code == cli::kUsage);
  CHECK(run({"scan", "--family", "mixed-epr", "--n-steps", "1"}).code == cli::kUsage);
  CHECK(run({"scan"}).code == cli::kUsage);
  CHECK(run({"wavefun", "--nbar", "0", "--lo", "-1"}).code == cli::kUsage);
  CHECK(run({"convert", "--in", (scratch() / "missing.json").string(), "--to", "W"}).code == cli::kUsage);
}

TEST_CASE("scan") {
  const fs::path serial = scratch() / "serial.csv";
  const fs::path parallel = scratch() / "parallel.csv";
  CHECK(run({"scan", "--family", "mixed-epr", "--out", serial.string()}).code == 0);
  CHECK(run({"scan", "--family", "mixed_epr", "--threads", "4", "--out", parallel.string()}).code == 0);
  const std::string a = slurp(serial);
  CHECK(a == slurp(parallel));
  CHECK(a.find('\r') == std::string::npos);

  std::string header;
  const auto rows = csv_rows(a, &header);
  CHECK(header == "mc,n,positive,pure,separable,p_representable");
  REQUIRE(rows.size() == 201u * 201u);
  // mc = 1 column.
  const double step = 0.01;
  double pos_flip = -1.0;
  double sep_flip = -1.0;
  for (std::size_t j = 1; j < 201; ++j) {
    const auto& prev = rows[100 * 201 + j - 1];
    const auto& cur = rows[100 * 201 + j];
    CHECK(cur[0] == 1.0);
    if (prev[2] == 0.0 && cur[2] == 1.0) pos_flip = cur[1];
    if (prev[4] == 0.0 && cur[4] == 1.0) sep_flip = cur[1];
  }
  CHECK(std::abs(pos_flip - 0.618034) <= step);
  CHECK(std::abs(sep_flip - 1.0) <= step);

  const Result r = run({"scan", "--family", "anti-epr", "--ratio", "1", "--mc-steps", "41", "--n-steps", "41"});
  CHECK(r.code == 0);
  for (const auto& row : csv_rows(r.out)) CHECK_FALSE((row[2] == 1.0 && row[4] == 0.0));
}

TEST_CASE("convert") {
  const fs::path vac = scratch() / "vac.json";
  spit(vac, cli::kernel_to_json(onemode::build_c({0.0, 0.0})));
  Result r = run({"convert", "--in", vac.string(), "--to", "W"});
  CHECK(r.code == 0);
  const GaussianKernel w = cli::kernel_from_json(r.out);
  CHECK(w.kind() == Kind::W);
  CHECK(max_abs_diff(w.matrix().mat(), 2.0 * linalg::CMatrix::identity(2)) == 0.0);

  const GaussianKernel c = states::squeezed_epr(0.7, 0.5, 0.3);
  const fs::path src = scratch() / "c.json";
  const fs::path q = scratch() / "q.json";
  const fs::path back = scratch() / "back.json";
  spit(src, cli::kernel_to_json(c));
  CHECK(run({"convert", "--in", src.string(), "--to", "Q", "--out", q.string()}).code == 0);
  CHECK(run({"convert", "--in", q.string(), "--to", "C", "--out", back.string()}).code == 0);
  CHECK(max_abs_diff(cli::kernel_from_json(slurp(back)).matrix().mat(), c.matrix().mat()) <= 1e-12);

  const fs::path pure = scratch() / "pure.json";
  spit(pure, cli::kernel_to_json(onemode::build_c({1.0, std::sqrt(2.0)})));
  CHECK(run({"convert", "--in", pure.string(), "--to", "P"}).code == cli::kNotPRepresentable);

  const fs::path zero_q = scratch() / "zero_q.json";
  spit(zero_q, R"({"modes":1,"kind":"Q","matrix":[[0,0],[0,0],[0,0],[0,0]]})");
  CHECK(run({"convert", "--in", zero_q.string(), "--to", "C"}).code == cli::kSingular);

  const fs::path bad = scratch() / "bad.json";
  spit(bad, R"({"modes":1,"kind":"C","matrix":[[1,0]]})");
  CHECK(run({"convert", "--in", bad.string(), "--to", "W"}).code == cli::kUsage);
}

TEST_CASE("kernel JSON round trip") {
  const GaussianKernel c = states::anti_epr(0.9, 0.6, 0.2);
  const GaussianKernel back = cli::kernel_from_json(cli::kernel_to_json(c));
  CHECK(back.kind() == Kind::C);
  CHECK(max_abs_diff(back.matrix().mat(), c.matrix().mat()) == 0.0);
  CHECK(cli::format_double(0.1) == "0.1");
  CHECK(std::stod(cli::format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK_THROWS_AS(cli::kernel_from_json("not json"), std::invalid_argument);
}

TEST_CASE("oracle") {
  Result r = run({"oracle", "--modes", "1", "--n", "0.5"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["agree"] == true);
  const auto diag = j["oracle"]["diagonal"];
  REQUIRE(diag.size() == 17);
  for (std::size_t k = 0; k < diag.size(); ++k)
    CHECK(std::abs(diag[k].get<double>() - (2.0 / 3.0) * std::pow(1.0 / 3.0, k)) < 1e-8);

  r = run({"oracle", "--modes", "2", "--family", "mixed-epr", "--n", "0.8", "--mc", "1"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["analytic"]["separable"] == false);
  CHECK(j["oracle"]["min_ppt_eig"].get<double>() < 0.0);
  CHECK(j["agree"] == true);

  r = run({"oracle", "--modes", "2", "--family", "thermal", "--g1", "0.3333333333333333", "--g2",
           "-0.3333333333333333"});
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["analytic"]["positive"] == false);
  CHECK(j["oracle"]["min_eig"].get<double>() < 0.0);

  CHECK(run({"oracle", "--modes", "1", "--n", "3", "--cutoff", "6"}).code == cli::kCutoff);
  CHECK(run({"oracle", "--modes", "1", "--n", "0.5", "--cutoff", "3"}).code == cli::kCutoff);
}

TEST_CASE("wavefunction grids") {
  std::string header;
  Result r = run({"wavefun", "--nbar", "0", "--lo", "-2", "--hi", "2", "--samples", "21"});
  CHECK(r.code == 0);
  auto rows = csv_rows(r.out, &header);
  CHECK(header == "q1,q2,psi");
  REQUIRE(rows.size() == 441);
  auto psi = [&](int i, int j) { return rows[static_cast<std::size_t>(i * 21 + j)][2]; };
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) {
      CHECK(psi(i, j) == doctest::Approx(psi(j, i)));
      CHECK(psi(i, j) == doctest::Approx(psi(i, 20 - j)));
    }
  }
  CHECK(rows[0][2] == states::epr_wavefunction({0.0}, -2.0, -2.0));

  r = run({"wavefun", "--nbar", "1", "--lo", "-2", "--hi", "2", "--samples", "21"});
  rows = csv_rows(r.out);
  bool flip_broken = false;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) {
      CHECK(psi(i, j) == doctest::Approx(psi(j, i)));
      if (std::abs(psi(i, j) - psi(i, 20 - j)) > 1e-3) flip_broken = true;
    }
  }
  CHECK(flip_broken);

  r = run({"wavefun", "--nbar", "1"});
  CHECK(r.code == 0);
  CHECK(csv_rows(r.out).size() == 201u * 201u);
}

TEST_CASE("Wigner grids") {
  std::string header;
  Result r = run({"wigner", "--modes", "1", "--n", "0", "--lo", "-1", "--hi", "1", "--samples", "11"});
  CHECK(r.code == 0);
  auto rows = csv_rows(r.out, &header);
  CHECK(header == "q,p,w");
  REQUIRE(rows.size() == 121);
  double peak = 0.0;
  for (const auto& row : rows) peak = std::max(peak, row[2]);
  CHECK(peak == doctest::Approx(2.0));
  CHECK(rows[60][2] == doctest::Approx(2.0));

  // Reduced state of mode 2 of a mixed EPR state is thermal.
  r = run({"wigner", "--modes", "2", "--family", "mixed-epr", "--n", "1", "--mc", "0.5", "--mode", "2", "--lo",
           "-1", "--hi", "1", "--samples", "3"});
  CHECK(r.code == 0);
  rows = csv_rows(r.out);
  CHECK(rows[4][2] == doctest::Approx(2.0 / 3.0));

  r = run({"wigner", "--modes", "1", "--n", "1", "--m", "0.5"});
  CHECK(r.code == 0);
  const GaussianKernel c = onemode::build_c({1.0, 0.5});
  const phasespace::GridSpec g = phasespace::default_grid(c);
  rows = csv_rows(r.out);
  REQUIRE(rows.size() == 201u * 201u);
  double sum = 0.0;
  for (const auto& row : rows) sum += row[2];
  CHECK(sum * g.x.step() * g.y.step() / (2.0 * std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-3));
}
