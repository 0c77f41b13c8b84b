// Copyright 2026 The latticecd Authors
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

// latticecd command-line front end. Every subcommand writes CSV headed by a
// '#' manifest line that records the full configuration.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "latticecd.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // certify check failed, non-convergence, i/o
constexpr int kExitValidation = 2;
constexpr int kExitSingular = 3;

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries an lcd_status out of a subcommand body.
struct ApiError : std::runtime_error {
  lcd_status status;
  ApiError(lcd_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(lcd_status s) {
  if (s != LCD_OK) throw ApiError(s, lcd_last_error());
}

std::string fmt(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Lattice = std::unique_ptr<lcd_lattice, Deleter<lcd_lattice, lcd_lattice_free>>;
using Matrix = std::unique_ptr<lcd_matrix, Deleter<lcd_matrix, lcd_matrix_free>>;
using State = std::unique_ptr<lcd_state, Deleter<lcd_state, lcd_state_free>>;
using Basis = std::unique_ptr<lcd_basis, Deleter<lcd_basis, lcd_basis_free>>;
using Spectrum = std::unique_ptr<lcd_spectrum, Deleter<lcd_spectrum, lcd_spectrum_free>>;
using Sweep = std::unique_ptr<lcd_sweep, Deleter<lcd_sweep, lcd_sweep_free>>;
using Report = std::unique_ptr<lcd_report, Deleter<lcd_report, lcd_report_free>>;

Lattice make_ssh(int L, int x0, double lambda) {
  lcd_lattice* p = nullptr;
  check(lcd_lattice_ssh(L, x0, lambda, &p));
  return Lattice(p);
}

Matrix hamiltonian(const Lattice& lat) {
  lcd_matrix* p = nullptr;
  check(lcd_hamiltonian(lat.get(), &p));
  return Matrix(p);
}

Matrix cd_generator(const Lattice& lat, double lambda, lcd_cd_mode mode) {
  lcd_matrix* p = nullptr;
  check(lcd_cd_generator(lat.get(), lambda, mode, &p, nullptr, nullptr));
  return Matrix(p);
}

std::vector<double> eigenvalues(const Matrix& m) {
  std::vector<double> v(lcd_matrix_dim(m.get()));
  check(lcd_eigh(m.get(), v.data(), nullptr));
  return v;
}

double gap(const std::vector<double>& v) {
  double g = 0.0;
  check(lcd_gap_to_zero_mode(v.data(), v.size(), &g));
  return g;
}

// Chain geometry shared by every subcommand.
struct Geometry {
  std::optional<int> sites;
  std::optional<int> L;
  int x0 = -1;

  int resolved_L() const { return L ? *L : (sites ? *sites : 101) + x0 + 1; }
  int resolved_sites() const { return resolved_L() - x0 - 1; }
};

struct Grid {
  double lo = -1.0;
  double hi = 1.0;
  int points = 201;

  std::vector<double> values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) {
      v[i] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
      if (std::abs(v[i]) < 1e-15 * std::max(std::abs(lo), std::abs(hi))) v[i] = 0.0;
    }
    return v;
  }
};

struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> items;

  Manifest& add(const std::string& k, const std::string& v) {
    items.emplace_back(k, v);
    return *this;
  }
  Manifest& add(const std::string& k, double v) { return add(k, fmt(v)); }
  Manifest& add(const std::string& k, int v) { return add(k, std::to_string(v)); }

  std::string line() const {
    std::string s = std::string("# latticecd ") + lcd_version() + " " + command;
    for (const auto& [k, v] : items) s += " " + k + "=" + v;
    return s;
  }
};

// Opens --out ("-" is stdout).
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw ApiError(LCD_ERR_IO, "cannot open " + path);
    }
  }
  std::ostream& os() { return path_ == "-" ? std::cout : file_; }
  const char* c_path() const { return path_ == "-" ? nullptr : path_.c_str(); }

 private:
  std::string path_;
  std::ofstream file_;
};

lcd_cd_mode parse_cd(const std::string& s) {
  if (s == "none") return LCD_CD_NONE;
  if (s == "full") return LCD_CD_FULL;
  return LCD_CD_TARGETED;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

void validate_geometry(const Geometry& g, bool odd) {
  require(g.resolved_sites() >= 3, "chain needs at least 3 sites");
  if (odd) require(g.resolved_sites() % 2 == 1, "the SSH edge mode needs an odd number of sites");
  require(g.resolved_sites() <= 4001, "at most 4001 sites");
}

void validate_cd_lambda(double lambda, const std::string& what) {
  require(std::abs(lambda) < 1.0, what + " must satisfy |lambda| < 1");
  require(lambda != 0.0, what + " = 0 is singular for the in-gap generator");
}

void validate_grid(const Grid& g) {
  require(g.points >= 1, "--points must be >= 1");
  require(std::isfinite(g.lo) && std::isfinite(g.hi) && g.lo <= g.hi, "invalid lambda range");
}

void add_geometry(CLI::App* sub, Geometry& g) {
  auto* s = sub->add_option("--sites", g.sites, "number of sites M (default 101)");
  auto* l = sub->add_option("--L", g.L, "right wall L (sites x0+1 .. L-1)");
  s->excludes(l);
  sub->add_option("--x0", g.x0, "left wall")->capture_default_str();
}

void add_grid(CLI::App* sub, Grid& g) {
  sub->add_option("--lambda-min", g.lo)->capture_default_str();
  sub->add_option("--lambda-max", g.hi)->capture_default_str();
  sub->add_option("--points", g.points)->capture_default_str();
}

// ---------------------------------------------------------------------------

void write_spectrum(std::ostream& os, const Geometry& geo, const std::vector<double>& grid,
                    lcd_spectrum_mode mode, double lambda_dot, const char* mode_name) {
  lcd_spectrum* raw = nullptr;
  check(lcd_spectrum_sweep(geo.resolved_L(), geo.x0, grid.data(), grid.size(), mode, lambda_dot, &raw));
  Spectrum spec(raw);
  const int m = lcd_spectrum_sites(raw);
  std::vector<double> e(m);
  os << "lambda,state_index,energy,mode\n";
  for (size_t r = 0; r < lcd_spectrum_rows(raw); ++r) {
    double lambda = 0.0;
    int skipped = 0;
    const char* reason = nullptr;
    check(lcd_spectrum_row(raw, r, &lambda, &skipped, e.data(), &reason));
    if (skipped) {
      os << "# skipped lambda=" << fmt(lambda) << ": " << reason << '\n';
      continue;
    }
    for (int i = 0; i < m; ++i) os << fmt(lambda) << ',' << i << ',' << fmt(e[i]) << ',' << mode_name << '\n';
  }
}

struct SpectrumCmd {
  Geometry geo;
  Grid grid;
  std::string mode = "bare";
  double lambda_dot = -1.8;
  std::string out = "-";
};

int run_spectrum(const SpectrumCmd& c) {
  validate_geometry(c.geo, false);
  validate_grid(c.grid);
  const lcd_spectrum_mode mode = c.mode == "bare"   ? LCD_SPECTRUM_BARE
                                 : c.mode == "full" ? LCD_SPECTRUM_FULL_CD
                                                    : LCD_SPECTRUM_TARGETED_CD;
  if (mode != LCD_SPECTRUM_BARE) validate_geometry(c.geo, true);
  Output out(c.out);
  Manifest m{"spectrum", {}};
  m.add("L", c.geo.resolved_L()).add("x0", c.geo.x0).add("M", c.geo.resolved_sites());
  m.add("lambda_min", c.grid.lo).add("lambda_max", c.grid.hi).add("points", c.grid.points);
  m.add("mode", c.mode).add("lambda_dot", mode == LCD_SPECTRUM_BARE ? 0.0 : c.lambda_dot);
  out.os() << m.line() << '\n';
  const char* name = mode == LCD_SPECTRUM_BARE ? "bare" : mode == LCD_SPECTRUM_FULL_CD ? "full-cd" : "targeted-cd";
  write_spectrum(out.os(), c.geo, c.grid.values(), mode, c.lambda_dot, name);
  return kExitOk;
}

struct CdSpectrumCmd {
  Geometry geo;
  Grid grid{-0.995, 0.995, 200};
  std::string mode = "targeted";
  double lambda0 = 0.9;
  double lambdaf = -0.9;
  double time = 1.0;
  std::string out = "-";
};

int run_cd_spectrum(const CdSpectrumCmd& c) {
  validate_geometry(c.geo, true);
  validate_grid(c.grid);
  require(c.time > 0.0 && std::isfinite(c.time), "--time must be positive");
  const double lambda_dot = (c.lambdaf - c.lambda0) / c.time;
  const lcd_spectrum_mode mode = c.mode == "full" ? LCD_SPECTRUM_FULL_CD : LCD_SPECTRUM_TARGETED_CD;
  Output out(c.out);
  Manifest m{"cd-spectrum", {}};
  m.add("L", c.geo.resolved_L()).add("x0", c.geo.x0).add("M", c.geo.resolved_sites());
  m.add("lambda_min", c.grid.lo).add("lambda_max", c.grid.hi).add("points", c.grid.points);
  m.add("mode", c.mode).add("lambda0", c.lambda0).add("lambdaf", c.lambdaf).add("time", c.time);
  m.add("lambda_dot", lambda_dot);
  out.os() << m.line() << '\n';
  write_spectrum(out.os(), c.geo, c.grid.values(), mode, lambda_dot,
                 mode == LCD_SPECTRUM_FULL_CD ? "full-cd" : "targeted-cd");
  return kExitOk;
}

struct StateCmd {
  Geometry geo;
  double lambda = 0.9;
  std::optional<int> index;
  std::string out = "-";
};

int run_state(const StateCmd& c) {
  validate_geometry(c.geo, true);
  require(std::abs(c.lambda) < 1.0, "--lambda must satisfy |lambda| < 1");
  if (c.index) require(*c.index >= 0 && *c.index < c.geo.resolved_sites(), "--index out of range");
  Manifest m{"state", {}};
  m.add("L", c.geo.resolved_L()).add("x0", c.geo.x0).add("M", c.geo.resolved_sites());
  m.add("lambda", c.lambda).add("state", c.index ? std::to_string(*c.index) : std::string("in-gap"));
  Lattice lat = make_ssh(c.geo.resolved_L(), c.geo.x0, c.lambda);
  lcd_state* raw = nullptr;
  if (c.index) {
    lcd_basis* b = nullptr;
    check(lcd_full_basis(lat.get(), c.lambda, &b));
    Basis basis(b);
    check(lcd_basis_state(b, static_cast<size_t>(*c.index), &raw));
  } else {
    check(lcd_in_gap_state(lat.get(), c.lambda, &raw));
  }
  State st(raw);
  std::cout.flush();
  check(lcd_state_write_csv(raw, lat.get(), c.lambda, m.line().c_str(), c.out == "-" ? nullptr : c.out.c_str()));
  return kExitOk;
}

struct CdMatrixCmd {
  Geometry geo;
  double lambda = 0.9;
  std::string mode = "full";
  std::string out = "-";
};

int run_cd_matrix(const CdMatrixCmd& c) {
  validate_geometry(c.geo, true);
  validate_cd_lambda(c.lambda, "--lambda");
  Manifest m{"cd-matrix", {}};
  m.add("L", c.geo.resolved_L()).add("x0", c.geo.x0).add("M", c.geo.resolved_sites());
  m.add("lambda", c.lambda).add("mode", c.mode);
  Lattice lat = make_ssh(c.geo.resolved_L(), c.geo.x0, c.lambda);
  std::cout.flush();
  check(lcd_cd_write_csv(lat.get(), c.lambda, parse_cd(c.mode), m.line().c_str(),
                         c.out == "-" ? nullptr : c.out.c_str()));
  return kExitOk;
}

struct NormCmd {
  Geometry geo;
  Grid grid{-0.999, 0.999, 200};
  std::vector<double> ratios_at;
  std::string mode = "full";
  std::string out = "-";
};

int run_norm(const NormCmd& c) {
  validate_geometry(c.geo, true);
  validate_grid(c.grid);
  require(std::abs(c.grid.lo) < 1.0 && std::abs(c.grid.hi) < 1.0, "lambda grid must lie inside (-1, 1)");
  for (double l : c.ratios_at) validate_cd_lambda(l, "--ratios-at");
  Output out(c.out);
  Manifest m{"norm", {}};
  m.add("L", c.geo.resolved_L()).add("x0", c.geo.x0).add("M", c.geo.resolved_sites());
  if (c.ratios_at.empty()) {
    m.add("lambda_min", c.grid.lo).add("lambda_max", c.grid.hi).add("points", c.grid.points);
  } else {
    std::string list;
    for (double l : c.ratios_at) list += (list.empty() ? "" : ",") + fmt(l);
    m.add("ratios_at", list).add("mode", c.mode);
  }
  std::ostream& os = out.os();
  os << m.line() << '\n';

  if (!c.ratios_at.empty()) {
    os << "d,ratio,lambda\n";
    for (double lambda : c.ratios_at) {
      Lattice lat = make_ssh(c.geo.resolved_L(), c.geo.x0, lambda);
      Matrix gen = cd_generator(lat, lambda, parse_cd(c.mode));
      for (int d = 0; d < c.geo.resolved_sites(); ++d) {
        double r = 0.0;
        check(lcd_matrix_diagonal_ratio(gen.get(), d, &r));
        os << d << ',' << fmt(r) << ',' << fmt(lambda) << '\n';
      }
    }
    return kExitOk;
  }

  os << "lambda,frobenius_full,frobenius_targeted\n";
  for (double lambda : c.grid.values()) {
    if (lambda == 0.0) {
      os << "# skipped lambda=0: generator singular\n";
      continue;
    }
    Lattice lat = make_ssh(c.geo.resolved_L(), c.geo.x0, lambda);
    const double full = lcd_matrix_frobenius(cd_generator(lat, lambda, LCD_CD_FULL).get());
    const double targeted = lcd_matrix_frobenius(cd_generator(lat, lambda, LCD_CD_TARGETED).get());
    os << fmt(lambda) << ',' << fmt(full) << ',' << fmt(targeted) << '\n';
  }
  return kExitOk;
}

// "a:b:s" -> a, a+s, ... <= b; a single integer is a one-element range.
std::vector<int> parse_range(const std::string& s, const std::string& flag) {
  std::vector<int> parts;
  std::string::size_type pos = 0;
  try {
    while (true) {
      const auto colon = s.find(':', pos);
      parts.push_back(std::stoi(s.substr(pos, colon - pos)));
      if (colon == std::string::npos) break;
      pos = colon + 1;
    }
  } catch (const std::exception&) {
    throw ValidationError(flag + ": expected a:b:step, got '" + s + "'");
  }
  if (parts.size() == 1) return parts;
  require(parts.size() == 3 && parts[2] > 0 && parts[0] <= parts[1], flag + ": expected a:b:step with a <= b, step > 0");
  std::vector<int> out;
  for (int v = parts[0]; v <= parts[1]; v += parts[2]) out.push_back(v);
  return out;
}

struct TransferCmd {
  Geometry geo;
  double lambda0 = 0.9;
  double lambdaf = -0.9;
  double time = 1.0;
  std::string cd = "none";
  std::optional<int> band;
  std::optional<double> dt;
  std::optional<std::string> sweep_d;
  bool certify = false;
  int trace_every = 1;
  std::string out = "-";
};

struct TraceSink {
  std::ostream* os;
  int every;
  long count = 0;
};

void trace_row(const lcd_trace_point* p, void* user) {
  auto* sink = static_cast<TraceSink*>(user);
  if (sink->count++ % sink->every != 0 && p->t != 0.0) return;
  *sink->os << fmt(p->t) << ',' << fmt(p->lambda) << ',' << fmt(p->fidelity_to_instantaneous) << ','
            << fmt(p->norm) << '\n';
}

int run_transfer(const TransferCmd& c) {
  validate_geometry(c.geo, true);
  require(c.time > 0.0 && std::isfinite(c.time), "--time must be positive");
  require(std::abs(c.lambda0) < 1.0 && std::abs(c.lambdaf) < 1.0, "lambda endpoints must satisfy |lambda| < 1");
  require(c.lambda0 != 0.0 && c.lambdaf != 0.0, "lambda endpoints must be nonzero (the edge state is not unique there)");
  const lcd_cd_mode cd = parse_cd(c.cd);
  const int sites = c.geo.resolved_sites();
  if (c.band) {
    require(cd != LCD_CD_NONE, "--band needs --cd full or targeted");
    require(*c.band >= 0 && *c.band <= sites - 1, "--band must lie in [0, M-1]");
  }
  std::vector<int> ds;
  if (c.sweep_d) {
    require(cd != LCD_CD_NONE, "--sweep-d needs --cd full or targeted");
    require(!c.band && !c.certify, "--sweep-d excludes --band and --certify");
    ds = parse_range(*c.sweep_d, "--sweep-d");
    for (int d : ds) require(d >= 0 && d <= sites - 1, "--sweep-d values must lie in [0, M-1]");
  }
  require(c.trace_every >= 1, "--trace-every must be >= 1");
  const double dt = c.dt.value_or(c.certify ? c.time / 400.0 : c.time * 1e-4);
  require(dt > 0.0 && std::isfinite(dt), "--dt must be positive");

  Output out(c.out);
  Manifest m{"transfer", {}};
  m.add("L", c.geo.resolved_L()).add("x0", c.geo.x0).add("M", sites);
  m.add("lambda0", c.lambda0).add("lambdaf", c.lambdaf).add("time", c.time).add("cd", c.cd);
  m.add("band", c.band ? std::to_string(*c.band) : std::string("none")).add("dt", dt);
  if (c.sweep_d) m.add("sweep_d", *c.sweep_d);
  if (c.certify) m.add("certify", "1");
  if (!c.sweep_d && !c.certify) m.add("trace_every", c.trace_every);
  std::ostream& os = out.os();
  os << m.line() << '\n';

  lcd_protocol p{c.lambda0, c.lambdaf, c.time, cd, c.band ? *c.band : -1};
  const int L = c.geo.resolved_L();

  if (c.sweep_d) {
    os << "d,fidelity\n";
    for (int d : ds) {
      p.band_limit = d;
      lcd_evolution r{};
      check(lcd_propagate(L, c.geo.x0, &p, dt, nullptr, nullptr, &r, nullptr));
      os << d << ',' << fmt(r.fidelity) << '\n';
    }
    return kExitOk;
  }

  if (c.certify) {
    lcd_sweep* raw = nullptr;
    check(lcd_convergence_sweep(L, c.geo.x0, &p, dt, &raw));
    Sweep sweep(raw);
    os << "dt,steps,fidelity,norm_drift\n";
    lcd_sweep_point pt{};
    for (size_t i = 0; i < lcd_sweep_size(raw); ++i) {
      check(lcd_sweep_point_at(raw, i, &pt));
      os << fmt(pt.dt) << ',' << pt.steps << ',' << fmt(pt.fidelity) << ',' << fmt(pt.norm_drift) << '\n';
    }
    const bool ok = lcd_sweep_converged(raw);
    os << "# converged=" << (ok ? 1 : 0) << " dt=" << fmt(pt.dt) << " fidelity=" << fmt(pt.fidelity) << '\n';
    return ok ? kExitOk : kExitFailure;
  }

  os << "t,lambda,fidelity_to_instantaneous,norm\n";
  TraceSink sink{&os, c.trace_every};
  lcd_evolution r{};
  check(lcd_propagate(L, c.geo.x0, &p, dt, trace_row, &sink, &r, nullptr));
  os << "# fidelity=" << fmt(r.fidelity) << " steps=" << r.steps << " norm_drift=" << fmt(r.norm_drift) << '\n';
  return kExitOk;
}

struct GapScalingCmd {
  double lambda = 0.0018;
  std::string sizes = "11:401:2";
  std::string mode = "targeted";
  double lambda0 = 0.9;
  double lambdaf = -0.9;
  double time = 1.0;
  std::string out = "-";
};

int run_gap_scaling(const GapScalingCmd& c) {
  validate_cd_lambda(c.lambda, "--lambda");
  require(c.time > 0.0 && std::isfinite(c.time), "--time must be positive");
  const std::vector<int> sizes = parse_range(c.sizes, "--sizes");
  for (int L : sizes) require(L >= 3 && L % 2 == 1 && L <= 4001, "--sizes must be odd and in [3, 4001]");
  const double lambda_dot = (c.lambdaf - c.lambda0) / c.time;
  Output out(c.out);
  Manifest m{"gap-scaling", {}};
  m.add("lambda", c.lambda).add("sizes", c.sizes).add("x0", -1).add("mode", c.mode);
  m.add("lambda0", c.lambda0).add("lambdaf", c.lambdaf).add("time", c.time).add("lambda_dot", lambda_dot);
  std::ostream& os = out.os();
  os << m.line() << '\n';
  os << "L,gap_bare_numeric,gap_bare_formula,gap_cd,ratio\n";
  for (int L : sizes) {
    Lattice lat = make_ssh(L, -1, c.lambda);
    Matrix h = hamiltonian(lat);
    Matrix gen = cd_generator(lat, c.lambda, parse_cd(c.mode));
    lcd_matrix* raw = nullptr;
    check(lcd_matrix_axpy(h.get(), lambda_dot, gen.get(), &raw));
    Matrix total(raw);
    const double bare = gap(eigenvalues(h));
    const double cdg = gap(eigenvalues(total));
    os << L << ',' << fmt(bare) << ',' << fmt(lcd_ssh_gap_formula(c.lambda, L)) << ',' << fmt(cdg) << ','
       << fmt(cdg / bare) << '\n';
  }
  return kExitOk;
}

struct CertifyCmd {
  int sites = 11;
  double lambda0 = 0.9;
  double lambdaf = -0.9;
  double time = 1.0;
  std::string out = "-";
};

int run_certify(const CertifyCmd& c) {
  require(c.sites >= 3 && c.sites % 2 == 1 && c.sites <= 401, "--sites must be odd and in [3, 401]");
  require(c.time > 0.0 && std::isfinite(c.time), "--time must be positive");
  validate_cd_lambda(c.lambda0, "--lambda0");
  validate_cd_lambda(c.lambdaf, "--lambdaf");
  Output out(c.out);
  Manifest m{"certify", {}};
  m.add("M", c.sites).add("x0", -1).add("lambda0", c.lambda0).add("lambdaf", c.lambdaf).add("time", c.time);
  std::ostream& os = out.os();
  os << m.line() << '\n';
  lcd_report* raw = nullptr;
  check(lcd_certify(c.sites, c.lambda0, c.lambdaf, c.time, &raw));
  Report report(raw);
  os << "check,passed,value,bound,detail\n";
  bool all = true;
  for (size_t i = 0; i < lcd_report_size(raw); ++i) {
    lcd_check k{};
    check(lcd_report_check(raw, i, &k));
    std::string detail = k.detail;
    for (char& ch : detail) {
      if (ch == ',') ch = ';';
    }
    os << k.name << ',' << (k.passed ? "pass" : "FAIL") << ',' << fmt(k.value) << ',' << fmt(k.bound) << ','
       << detail << '\n';
    all = all && k.passed;
  }
  return all ? kExitOk : kExitFailure;
}

int exit_code_for(lcd_status s) {
  switch (s) {
    case LCD_ERR_INVALID_ARGUMENT:
    case LCD_ERR_UNSUPPORTED: return kExitValidation;
    case LCD_ERR_SINGULAR:
    case LCD_ERR_DOMAIN: return kExitSingular;
    default: return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counterdiabatic driving on finite SSH chains"};
  app.set_version_flag("--version", std::string("latticecd ") + lcd_version());
  app.require_subcommand(1, 1);
  std::function<int()> action;

  SpectrumCmd spectrum;
  auto* s = app.add_subcommand("spectrum", "eigenvalues over a lambda grid");
  add_geometry(s, spectrum.geo);
  add_grid(s, spectrum.grid);
  s->add_option("--mode", spectrum.mode)->check(CLI::IsMember({"bare", "full", "targeted"}))->capture_default_str();
  s->add_option("--lambda-dot", spectrum.lambda_dot, "ramp rate multiplying the CD generator")->capture_default_str();
  s->add_option("--out", spectrum.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_spectrum(spectrum); }; });

  CdSpectrumCmd cd_spectrum;
  s = app.add_subcommand("cd-spectrum", "spectrum of H + lambda_dot A for a linear ramp");
  add_geometry(s, cd_spectrum.geo);
  add_grid(s, cd_spectrum.grid);
  s->add_option("--mode", cd_spectrum.mode)->check(CLI::IsMember({"full", "targeted"}))->capture_default_str();
  s->add_option("--lambda0", cd_spectrum.lambda0)->capture_default_str();
  s->add_option("--lambdaf", cd_spectrum.lambdaf)->capture_default_str();
  s->add_option("--time", cd_spectrum.time, "total drive time")->capture_default_str();
  s->add_option("--out", cd_spectrum.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_cd_spectrum(cd_spectrum); }; });

  StateCmd state;
  s = app.add_subcommand("state", "analytic eigenstate (in-gap by default)");
  add_geometry(s, state.geo);
  s->add_option("--lambda", state.lambda)->capture_default_str();
  s->add_option("--index", state.index, "basis index in energy order instead of the in-gap state");
  s->add_option("--out", state.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_state(state); }; });

  CdMatrixCmd cd_matrix;
  s = app.add_subcommand("cd-matrix", "dump the CD generator");
  add_geometry(s, cd_matrix.geo);
  s->add_option("--lambda", cd_matrix.lambda)->capture_default_str();
  s->add_option("--mode", cd_matrix.mode)->check(CLI::IsMember({"full", "targeted"}))->capture_default_str();
  s->add_option("--out", cd_matrix.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_cd_matrix(cd_matrix); }; });

  NormCmd norm;
  s = app.add_subcommand("norm", "Frobenius norms of the CD generators, or band ratios");
  add_geometry(s, norm.geo);
  add_grid(s, norm.grid);
  s->add_option("--ratios-at", norm.ratios_at, "lambdas for d,ratio output")->delimiter(',');
  s->add_option("--mode", norm.mode, "generator for --ratios-at")
      ->check(CLI::IsMember({"full", "targeted"}))
      ->capture_default_str();
  s->add_option("--out", norm.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_norm(norm); }; });

  TransferCmd transfer;
  s = app.add_subcommand("transfer", "edge-to-edge transfer under a linear ramp");
  add_geometry(s, transfer.geo);
  s->add_option("--lambda0", transfer.lambda0)->capture_default_str();
  s->add_option("--lambdaf", transfer.lambdaf)->capture_default_str();
  s->add_option("--time", transfer.time, "total drive time")->capture_default_str();
  s->add_option("--cd", transfer.cd)->check(CLI::IsMember({"none", "full", "targeted"}))->capture_default_str();
  s->add_option("--band", transfer.band, "keep d diagonals of the CD generator");
  s->add_option("--dt", transfer.dt, "time step (default time*1e-4, or time/400 with --certify)");
  s->add_option("--sweep-d", transfer.sweep_d, "d range a:b:step; writes d,fidelity");
  s->add_flag("--certify", transfer.certify, "halve dt until the fidelity converges");
  s->add_option("--trace-every", transfer.trace_every)->capture_default_str();
  s->add_option("--out", transfer.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_transfer(transfer); }; });

  GapScalingCmd gap_scaling;
  s = app.add_subcommand("gap-scaling", "edge-mode gap versus chain length (x0 = -1)");
  s->add_option("--lambda", gap_scaling.lambda)->capture_default_str();
  s->add_option("--sizes", gap_scaling.sizes, "L range a:b:step")->capture_default_str();
  s->add_option("--mode", gap_scaling.mode)->check(CLI::IsMember({"full", "targeted"}))->capture_default_str();
  s->add_option("--lambda0", gap_scaling.lambda0)->capture_default_str();
  s->add_option("--lambdaf", gap_scaling.lambdaf)->capture_default_str();
  s->add_option("--time", gap_scaling.time)->capture_default_str();
  s->add_option("--out", gap_scaling.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_gap_scaling(gap_scaling); }; });

  CertifyCmd certify;
  s = app.add_subcommand("certify", "self checks and certified propagation");
  s->add_option("--sites", certify.sites)->capture_default_str();
  s->add_option("--lambda0", certify.lambda0)->capture_default_str();
  s->add_option("--lambdaf", certify.lambdaf)->capture_default_str();
  s->add_option("--time", certify.time)->capture_default_str();
  s->add_option("--out", certify.out)->capture_default_str();
  s->callback([&] { action = [&] { return run_certify(certify); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    std::cerr << "latticecd: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ApiError& e) {
    std::cerr << "latticecd: " << lcd_status_string(e.status) << ": " << e.what() << '\n';
    return exit_code_for(e.status);
  } catch (const std::exception& e) {
    std::cerr << "latticecd: " << e.what() << '\n';
    return kExitFailure;
  }
}
