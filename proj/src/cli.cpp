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

#include "gauss/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "gauss/error.hpp"
#include "gauss/fock.hpp"
#include "gauss/onemode.hpp"
#include "gauss/phasespace.hpp"
#include "gauss/states.hpp"
#include "gauss/twomode.hpp"

namespace gauss::cli {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Family family_from_string(std::string_view s) {
  std::string t(s);
  std::replace(t.begin(), t.end(), '_', '-');
  if (t == "mixed-epr") return Family::MixedEpr;
  if (t == "anti-epr") return Family::AntiEpr;
  if (t == "squeezed-epr") return Family::SqueezedEpr;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

// ---------------------------------------------------------------- scan

void ScanRequest::validate() const {
  if (mc_steps < 2 || n_steps < 2) throw std::invalid_argument("scan steps must be >= 2");
  for (auto [lo, hi] : {std::pair{mc_lo, mc_hi}, std::pair{n_lo, n_hi}}) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw std::invalid_argument("scan ranges must be finite with lo < hi");
    }
  }
  if (!std::isfinite(ratio)) throw std::invalid_argument("ratio must be finite");
}

double ScanRequest::mc_at(int i) const { return mc_lo + (mc_hi - mc_lo) * i / (mc_steps - 1); }
double ScanRequest::n_at(int j) const { return n_lo + (n_hi - n_lo) * j / (n_steps - 1); }

namespace {

GaussianKernel family_kernel(Family f, double ratio, double n, double mc) {
  switch (f) {
    case Family::MixedEpr: return states::mixed_epr(n, mc);
    case Family::AntiEpr: return states::anti_epr(n, mc, ratio * mc);
    case Family::SqueezedEpr: return states::squeezed_epr(n, mc, ratio * mc);
  }
  return states::mixed_epr(n, mc);
}

ScanCell scan_cell(const ScanRequest& r, double mc, double n) {
  ScanCell cell{mc, n, false, false, false, false};
  std::optional<GaussianKernel> k;
  try {
    k.emplace(family_kernel(r.family, r.ratio, n, mc));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAState) return cell;
    throw;
  }
  cell.positive = twomode::positivity_by_q(*k);
  cell.pure = cell.positive && twomode::purity2(*k);
  cell.separable = cell.positive && twomode::ppt_separable(*k);
  cell.p_representable = twomode::p_representable(*k);
  return cell;
}

}  // namespace

std::vector<ScanCell> scan(const ScanRequest& r, int threads) {
  r.validate();
  std::vector<ScanCell> cells(static_cast<std::size_t>(r.mc_steps) * static_cast<std::size_t>(r.n_steps));
  auto column = [&](int i) {
    const double mc = r.mc_at(i);
    for (int j = 0; j < r.n_steps; ++j) {
      cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(r.n_steps) + static_cast<std::size_t>(j)] =
          scan_cell(r, mc, r.n_at(j));
    }
  };
  const int workers = std::clamp(threads, 1, r.mc_steps);
  if (workers == 1) {
    for (int i = 0; i < r.mc_steps; ++i) column(i);
    return cells;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < r.mc_steps; i += workers) column(i);
      } catch (...) {
        failures[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures)
    if (f) std::rethrow_exception(f);
  return cells;
}

std::string scan_csv(const std::vector<ScanCell>& cells) {
  std::string s = "mc,n,positive,pure,separable,p_representable\n";
  s.reserve(cells.size() * 24);
  for (const ScanCell& c : cells) {
    s += format_double(c.mc);
    s += ',';
    s += format_double(c.n);
    for (bool b : {c.positive, c.pure, c.separable, c.p_representable}) {
      s += ',';
      s += b ? '1' : '0';
    }
    s += '\n';
  }
  return s;
}

// ---------------------------------------------------------------- kernel JSON

std::string kernel_to_json(const GaussianKernel& k) {
  json j;
  j["modes"] = k.modes();
  j["kind"] = std::string(to_string(k.kind()));
  json m = json::array();
  for (int r = 0; r < k.dim(); ++r)
    for (int c = 0; c < k.dim(); ++c) m.push_back({k(r, c).real(), k(r, c).imag()});
  j["matrix"] = std::move(m);
  return j.dump(2) + "\n";
}

GaussianKernel kernel_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("kernel JSON: ") + e.what());
  }
  try {
    const int modes = j.at("modes").get<int>();
    if (modes != 1 && modes != 2) throw std::invalid_argument("kernel JSON: modes must be 1 or 2");
    const Kind kind = kind_from_string(j.at("kind").get<std::string>());
    const json& m = j.at("matrix");
    const int dim = 2 * modes;
    if (!m.is_array() || m.size() != static_cast<std::size_t>(dim * dim)) {
      throw std::invalid_argument("kernel JSON: matrix needs " + std::to_string(dim * dim) + " entries");
    }
    linalg::CMatrix a(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) {
        const json& e = m.at(static_cast<std::size_t>(r * dim + c));
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("kernel JSON: entries are [re, im] pairs");
        a(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
      }
    return GaussianKernel(kind, linalg::SymMatrix(a));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("kernel JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------- commands

namespace {

struct StateFlags {
  std::string in;
  int modes = 1;
  std::string family;
  double n = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  cplx m = 0.0;
  cplx m1 = 0.0;
  cplx m2 = 0.0;
  cplx ms = 0.0;
  cplx mc = 0.0;
  double g = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* n1_opt = nullptr;
  CLI::Option* n2_opt = nullptr;
  std::vector<CLI::Option*> g_opts;

  bool thermal() const {
    if (!family.empty()) return family == "thermal";
    return std::any_of(g_opts.begin(), g_opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
  }
};

void add_state_flags(CLI::App* sub, StateFlags& f) {
  sub->add_option("--in", f.in, "kernel JSON file (overrides moment flags)");
  sub->add_option("--modes", f.modes, "1 or 2")->check(CLI::IsMember({1, 2}));
  sub->add_option("--family", f.family, "mixed-epr, anti-epr, squeezed-epr or thermal");
  f.n_opt = sub->add_option("--n", f.n, "occupation (one mode, or both modes of a family)");
  f.n1_opt = sub->add_option("--n1", f.n1);
  f.n2_opt = sub->add_option("--n2", f.n2);
  sub->add_option("--m", f.m, "anomalous moment (complex, e.g. 0.3+0.1i)");
  sub->add_option("--m1", f.m1);
  sub->add_option("--m2", f.m2);
  sub->add_option("--ms", f.ms);
  sub->add_option("--mc", f.mc);
  // Any g flag without --family selects the thermal family.
  f.g_opts = {sub->add_option("--g", f.g, "thermal parameter, one mode"), sub->add_option("--g1", f.g1),
              sub->add_option("--g2", f.g2)};
}

double real_flag(cplx v, const char* name) {
  if (v.imag() != 0.0) throw std::invalid_argument(std::string(name) + " must be real for this family");
  return v.real();
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

GaussianKernel state_from_flags(const StateFlags& f) {
  if (!f.in.empty()) return convert(kernel_from_json(read_file(f.in)), Kind::C);
  if (f.modes == 1) {
    if (f.thermal()) return onemode::thermal_kernel(f.g);
    if (!f.family.empty()) throw std::invalid_argument("one-mode states take no family other than thermal");
    return onemode::build_c({f.n, f.m});
  }
  if (f.thermal()) return twomode::thermal_product({f.g1, f.g2});
  if (f.family.empty()) {
    twomode::TwoModeMoments p;
    p.n1 = f.n1_opt->count() > 0 ? f.n1 : f.n;
    p.n2 = f.n2_opt->count() > 0 ? f.n2 : f.n;
    p.m1 = f.m1;
    p.m2 = f.m2;
    p.ms = f.ms;
    p.mc = f.mc;
    return twomode::build_c2(p);
  }
  const double mc = real_flag(f.mc, "--mc");
  switch (family_from_string(f.family)) {
    case Family::MixedEpr: return states::mixed_epr(f.n, mc);
    case Family::AntiEpr: return states::anti_epr(f.n, mc, real_flag(f.ms, "--ms"));
    case Family::SqueezedEpr: return states::squeezed_epr(f.n, mc, real_flag(f.m, "--m"));
  }
  throw std::invalid_argument("unknown family");
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAState:
    case ErrorKind::NotPositive:
    case ErrorKind::NoRealSolution: return kNotAState;
    case ErrorKind::SingularMatrix: return kSingular;
    case ErrorKind::NotPRepresentable: return kNotPRepresentable;
    case ErrorKind::CutoffTooSmall: return kCutoff;
    default: return kUsage;
  }
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::invalid_argument("cannot write '" + path + "'");
  os << text;
}

json classify_json(const GaussianKernel& c) {
  json j;
  j["exists"] = true;
  if (c.modes() == 1) {
    const onemode::OneModeVerdict v = onemode::classify(onemode::moments_of(c));
    j["positive"] = v.positive;
    j["pure"] = v.pure;
    j["p_representable"] = v.p_representable;
    j["separable"] = nullptr;
    j["g"] = v.g ? json(*v.g) : json(nullptr);
    j["trace_g2"] = onemode::purity_from_wigner(convert(c, Kind::W));
    return j;
  }
  const twomode::TwoModeVerdict v = twomode::classify(c);
  j["positive"] = v.positive;
  j["pure"] = v.pure;
  j["p_representable"] = v.p_representable;
  j["separable"] = v.ppt_separable ? json(*v.ppt_separable) : json(nullptr);
  j["g"] = v.thermal ? json::array({v.thermal->g1, v.thermal->g2}) : json(nullptr);
  j["trace_g2"] = twomode::trace_g2(c);
  return j;
}

int cmd_classify(const StateFlags& f, std::ostream& out, std::ostream& err) {
  std::optional<GaussianKernel> c;
  try {
    c.emplace(state_from_flags(f));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAState) throw;
    out << json{{"exists", false}}.dump(2) << "\n";
    err << "not a state: " << e.what() << "\n";
    return kNotAState;
  }
  out << classify_json(*c).dump(2) << "\n";
  return kOk;
}

int cmd_scan(const ScanRequest& r, int threads, const std::string& path, std::ostream& out) {
  emit(scan_csv(scan(r, threads)), path, out);
  return kOk;
}

int cmd_convert(const std::string& in, const std::string& to, const std::string& path, std::ostream& out) {
  const GaussianKernel k = kernel_from_json(read_file(in));
  emit(kernel_to_json(convert(k, kind_from_string(to))), path, out);
  return kOk;
}

int cmd_oracle(const StateFlags& f, int cutoff, std::ostream& out, std::ostream& err) {
  const GaussianKernel c = state_from_flags(f);
  const fock::FockOperator op = fock::from_kernel(c, cutoff);
  const std::vector<double> spec = fock::spectrum(op);

  json analytic;
  json oracle;
  bool indeterminate = false;
  bool agree = true;
  if (c.modes() == 1) {
    const bool positive = onemode::classify(onemode::moments_of(c)).positive;
    analytic["positive"] = positive;
    agree = fock::agrees(positive, spec.back(), &indeterminate);
    oracle["min_eig"] = spec.back();
  } else {
    const bool positive = twomode::positivity_by_q(c);
    const bool ppt_positive = twomode::positivity_by_q(twomode::partial_transpose(c));
    analytic["positive"] = positive;
    // Separability is only defined for states; the transposed kernel is still compared.
    analytic["separable"] = positive ? json(ppt_positive) : json(nullptr);
    const double min_ppt = fock::spectrum(fock::partial_transpose_fock(op)).back();
    bool ind_pos = false;
    bool ind_ppt = false;
    agree = fock::agrees(positive, spec.back(), &ind_pos) && fock::agrees(ppt_positive, min_ppt, &ind_ppt);
    indeterminate = ind_pos || ind_ppt;
    oracle["min_eig"] = spec.back();
    oracle["min_ppt_eig"] = min_ppt;
  }
  oracle["trace"] = op.entries().trace().real();
  oracle["trace_g2"] = fock::trace_power(op, 2);
  json diag = json::array();
  for (int i = 0; i < op.dim(); ++i) diag.push_back(op(i, i).real());
  oracle["diagonal"] = std::move(diag);

  json j;
  j["analytic"] = std::move(analytic);
  j["oracle"] = std::move(oracle);
  j["agree"] = agree;
  j["indeterminate"] = indeterminate;
  j["truncation_loss"] = op.truncation_loss();
  out << j.dump(2) << "\n";
  if (!agree) {
    err << "oracle disagrees with the closed-form verdict\n";
    return kOracleDisagree;
  }
  return kOk;
}

std::optional<phasespace::Axis> axis_from(double lo, double hi, int samples, bool given) {
  if (!given) return std::nullopt;
  return phasespace::Axis{lo, hi, samples};
}

int cmd_wavefun(double nbar, std::optional<phasespace::Axis> axis, int samples, const std::string& path,
                std::ostream& out) {
  const states::SmoothedEprParam p{nbar};
  if (!(nbar >= 0.0)) throw std::invalid_argument("--nbar must be non-negative");
  if (!axis) {
    // |psi|^2 is widest along q1 = q2, with variance 1 / (4 (nbar + 1/2 - sqrt(nbar (nbar + 1)))).
    const double a = nbar + 0.5 - std::sqrt(nbar * (nbar + 1.0));
    const double half = phasespace::kDefaultSigmas / (2.0 * std::sqrt(a));
    axis = phasespace::Axis{-half, half, samples};
  }
  const phasespace::GridSpec g(*axis, *axis);
  std::string s = "q1,q2,psi\n";
  for (const auto& r : phasespace::scan_wavefunction(p, g)) {
    s += format_double(r.q1) + ',' + format_double(r.q2) + ',' + format_double(r.psi) + '\n';
  }
  emit(s, path, out);
  return kOk;
}

int cmd_wigner(const StateFlags& f, int mode, std::optional<phasespace::Axis> axis, int samples,
               const std::string& path, std::ostream& out) {
  GaussianKernel c = state_from_flags(f);
  if (c.modes() == 2) {
    c = phasespace::reduced_kernel(c, mode);
  } else if (mode != 1) {
    throw std::invalid_argument("--mode 2 needs a two-mode state");
  }
  phasespace::GridSpec g = phasespace::default_grid(c);
  if (axis) {
    g = phasespace::GridSpec(*axis, *axis);
  } else {
    g.x.samples = g.y.samples = samples;
    g = phasespace::GridSpec(g.x, g.y);
  }
  std::string s = "q,p,w\n";
  for (const auto& r : phasespace::wigner_grid(c, g)) {
    s += format_double(r.q) + ',' + format_double(r.p) + ',' + format_double(r.w) + '\n';
  }
  emit(s, path, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-mean Gaussian states of one and two bosonic modes", "gausstool"};
  app.require_subcommand(1);

  StateFlags classify_flags;
  CLI::App* classify = app.add_subcommand("classify", "existence, positivity, purity, separability");
  add_state_flags(classify, classify_flags);

  ScanRequest req;
  std::string scan_family;
  int threads = 1;
  std::string scan_out;
  CLI::App* scan_cmd = app.add_subcommand("scan", "flag grid over the (mc, n) plane");
  scan_cmd->add_option("--family", scan_family, "mixed-epr, anti-epr or squeezed-epr")->required();
  scan_cmd->add_option("--ratio", req.ratio, "ms / mc (anti-epr) or m / mc (squeezed-epr)");
  scan_cmd->add_option("--mc-lo", req.mc_lo);
  scan_cmd->add_option("--mc-hi", req.mc_hi);
  scan_cmd->add_option("--mc-steps", req.mc_steps);
  scan_cmd->add_option("--n-lo", req.n_lo);
  scan_cmd->add_option("--n-hi", req.n_hi);
  scan_cmd->add_option("--n-steps", req.n_steps);
  scan_cmd->add_option("--threads", threads)->check(CLI::PositiveNumber);
  scan_cmd->add_option("--out", scan_out);

  std::string convert_in;
  std::string convert_to;
  std::string convert_out;
  CLI::App* convert_cmd = app.add_subcommand("convert", "change kernel representation");
  convert_cmd->add_option("--in", convert_in)->required();
  convert_cmd->add_option("--to", convert_to)->required()->check(CLI::IsMember({"C", "W", "Q", "P"}));
  convert_cmd->add_option("--out", convert_out);

  StateFlags oracle_flags;
  int cutoff = fock::kDefaultCutoff;
  CLI::App* oracle = app.add_subcommand("oracle", "compare verdicts with a truncated Fock-basis matrix");
  add_state_flags(oracle, oracle_flags);
  oracle->add_option("--cutoff", cutoff, "max occupation per mode");

  double nbar = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int samples = phasespace::kDefaultSamples;
  std::string grid_out;
  CLI::App* wavefun = app.add_subcommand("wavefun", "smoothed EPR wave function on a (q1, q2) grid");
  wavefun->add_option("--nbar", nbar)->required();
  CLI::Option* wf_lo = wavefun->add_option("--lo", lo);
  CLI::Option* wf_hi = wavefun->add_option("--hi", hi);
  wavefun->add_option("--samples", samples);
  wavefun->add_option("--out", grid_out);
  wf_lo->needs(wf_hi);
  wf_hi->needs(wf_lo);

  StateFlags wigner_flags;
  int mode = 1;
  CLI::App* wigner = app.add_subcommand("wigner", "one-mode (or reduced) Wigner function on a (q, p) grid");
  add_state_flags(wigner, wigner_flags);
  wigner->add_option("--mode", mode, "which mode of a two-mode state")->check(CLI::IsMember({1, 2}));
  CLI::Option* wg_lo = wigner->add_option("--lo", lo);
  CLI::Option* wg_hi = wigner->add_option("--hi", hi);
  wigner->add_option("--samples", samples);
  wigner->add_option("--out", grid_out);
  wg_lo->needs(wg_hi);
  wg_hi->needs(wg_lo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(classify_flags, out, err);
    if (*scan_cmd) {
      req.family = family_from_string(scan_family);
      return cmd_scan(req, threads, scan_out, out);
    }
    if (*convert_cmd) return cmd_convert(convert_in, convert_to, convert_out, out);
    if (*oracle) return cmd_oracle(oracle_flags, cutoff, out, err);
    if (*wavefun) {
      return cmd_wavefun(nbar, axis_from(lo, hi, samples, wf_lo->count() > 0), samples, grid_out, out);
    }
    if (*wigner) {
      return cmd_wigner(wigner_flags, mode, axis_from(lo, hi, samples, wg_lo->count() > 0), samples, grid_out,
                        out);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "usage: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace gauss::cli
