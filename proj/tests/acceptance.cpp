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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "latticecd/cd_engine.hpp"
#include "latticecd/dynamics.hpp"
#include "latticecd/spectral.hpp"
#include "support.hpp"

using namespace latticecd;
using namespace latticecd::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Rounds to three significant figures.
double sig3(double v) {
  const double scale = std::pow(10.0, 2 - static_cast<int>(std::floor(std::log10(std::abs(v)))));
  return std::round(v * scale) / scale;
}

Outcome c1_basis() {
  double res = 0.0, de = 0.0;
  for (int m : {11, 101}) {
    for (double l : {0.9, -0.9, 0.5, -0.5, 0.1, -0.1, 1e-3, -1e-3}) {
      const LatticeSpec spec = ssh_spec(m, -1, l);
      const CMatrix h = build_hamiltonian(spec).matrix();
      const auto basis = full_basis(spec, l);
      std::vector<double> e;
      for (const auto& s : basis) {
        res = std::max(res, (h * s.coeffs - s.energy * s.coeffs).cwiseAbs().maxCoeff());
        e.push_back(s.energy);
      }
      std::sort(e.begin(), e.end());
      const EigenDecomposition eig = eigh(build_hamiltonian(spec));
      for (std::size_t i = 0; i < e.size(); ++i) de = std::max(de, std::abs(e[i] - eig.values(i)));
    }
  }
  return {res <= 1e-10 && de <= 1e-10, fmt("max |H psi - E psi| = %.2e, max |E - eigh| = %.2e (bound 1e-10)", res, de)};
}

Outcome c2_edge_alpha() {
  const double a1 = edge_alpha(ssh_spec(101, -1, 0.999), 0.999).imag();
  const double a2 = edge_alpha(ssh_spec(101, -1, 1e-3), 1e-3).imag();
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double l = -0.98 + 1.96 * i / 49.0;
    worst = std::max(worst, std::abs(edge_alpha(ssh_spec(11, -1, l), l).imag() - edge_alpha_closed_form(l)));
  }
  const bool ok = sig3(a1) == 0.0224 && sig3(a2) == 0.999 && worst <= 1e-10;
  return {ok, fmt("a(0.999) = %.6f, a(1e-3) = %.6f, max closed-form diff over 50 points = %.2e", a1, a2, worst)};
}

SweepResult certified(int m, CdMode mode, double total_time, std::optional<int> band = std::nullopt) {
  const Protocol p{0.9, -0.9, total_time, mode, band};
  return convergence_sweep(ssh_builder(m, -1), p, total_time / 400.0);
}

double drift_of(const SweepResult& s) {
  double d = 0.0;
  for (const auto& p : s.points) d = std::max(d, p.norm_drift);
  return d;
}

Outcome c3_bare() {
  const SweepResult s11 = certified(11, CdMode::kNone, 1.0);
  const SweepResult s101 = certified(101, CdMode::kNone, 1.0);
  const double f11 = s11.final_run.fidelity, f101 = s101.final_run.fidelity;
  const bool ok = s11.converged && s101.converged && f11 >= 1e-11 && f11 <= 1e-9 && f101 < 1e-12 &&
                  drift_of(s11) <= 1e-8 && drift_of(s101) <= 1e-8;
  return {ok, fmt("M=11 F = %.4e (dt %.2e), M=101 F = %.2e (dt %.2e), converged %d/%d", f11,
                  s11.points.back().dt, f101, s101.points.back().dt, s11.converged, s101.converged)};
}

Outcome c4_cd_exact() {
  bool ok = true;
  double worst = 0.0, drift = 0.0;
  std::string where;
  for (CdMode mode : {CdMode::kFull, CdMode::kTargeted}) {
    for (int m : {11, 101}) {
      for (double t : {0.1, 1.0, 10.0}) {
        const SweepResult s = certified(m, mode, t);
        const double infid = 1.0 - s.final_run.fidelity;
        ok = ok && s.converged && infid <= 1e-6;
        drift = std::max(drift, drift_of(s));
        if (infid > worst) {
          worst = infid;
          where = fmt("%s M=%d T=%g", to_string(mode), m, t);
        }
      }
    }
  }
  ok = ok && drift <= 1e-8;
  return {ok, fmt("worst 1 - F = %.2e (%s), max norm drift %.1e, all sweeps certified", worst, where.c_str(), drift)};
}

Outcome c5_gap_formula() {
  double worst = 0.0;
  for (int L : {11, 51, 101, 201}) {
    for (double l : {0.0, 1e-3, -1e-3, 0.1, -0.1}) {
      const EigenDecomposition e = eigh(build_hamiltonian(ssh_spec(L, -1, l)));
      worst = std::max(worst, std::abs(gap_to_zero_mode(e.values) - ssh_gap_formula(l, L)));
    }
  }
  const double l = 1.8e-3;
  bool monotone = true;
  double prev = INFINITY;
  for (int L = 11; L <= 4001; L += 10) {
    const double d = std::abs(ssh_gap_formula(l, L) - 2 * l);
    monotone = monotone && d < prev;
    prev = d;
  }
  return {worst <= 1e-10 && monotone,
          fmt("max |Eq - eigh| = %.2e (bound 1e-10); |gap - 2 lambda| strictly decreasing for L = 11..4001: %s", worst,
              monotone ? "yes" : "no")};
}

double targeted_ratio(int L) {
  const double l = 1.8e-3, rate = -1.8;
  const LatticeSpec spec = ssh_spec(L, -1, l);
  const HermitianMatrix h = build_hamiltonian(spec);
  const HermitianMatrix cd(h.matrix() + rate * targeted_cd(spec, l).matrix.matrix());
  return gap_to_zero_mode(eigh(cd).values) / gap_to_zero_mode(eigh(h).values);
}

Outcome c6_gap_ratio() {
  bool in_window = true;
  std::string mid;
  for (int L : {51, 101, 151, 201}) {
    const double r = targeted_ratio(L);
    in_window = in_window && r >= 1.6 && r <= 2.4;
    mid += fmt(" L=%d:%.4f", L, r);
  }
  std::string tail;
  bool decreasing = true;
  double prev = INFINITY;
  for (int L : {101, 201, 301, 401}) {
    const double r = targeted_ratio(L);
    decreasing = decreasing && r < prev && r > 1.0;
    prev = r;
    tail += fmt(" L=%d:%.4f", L, r);
  }
  return {in_window && decreasing, "ratio in [1.6, 2.4]:" + mid + "; decreasing toward 1:" + tail};
}

Outcome c7_truncation() {
  const SpecBuilder b = ssh_builder(101, -1);
  const double dt = 1.0 / 400;
  auto run = [&](CdMode mode, std::optional<int> d) {
    return propagate(b, {0.9, -0.9, 1.0, mode, d}, dt).fidelity;
  };
  const double none = run(CdMode::kNone, std::nullopt);
  const double full = run(CdMode::kFull, std::nullopt);
  const double d0 = run(CdMode::kFull, 0);
  const double dmax = run(CdMode::kFull, 100);
  double worst_short = 0.0;
  for (int d = 1; d <= 10; ++d) worst_short = std::max(worst_short, run(CdMode::kFull, d));
  worst_short = std::max(worst_short, d0);
  const bool ok = std::abs(d0 - none) <= 1e-8 && std::abs(dmax - full) <= 1e-10 && worst_short < 0.5;
  return {ok, fmt("M=101: |F(d=0) - F(none)| = %.1e, |F(d=100) - F(full)| = %.1e, max F(d<=10) = %.2e, F(full) = %.8f",
                  std::abs(d0 - none), std::abs(dmax - full), worst_short, full)};
}

Outcome c8_derivatives() {
  const double h = 1e-6;
  double wa = 0.0, wb = 0.0, wn = 0.0;
  const cplx bulk = std::polar(1.0, std::acos(-1.0) / 3);
  for (double l : derivative_grid()) {
    auto alpha = [](double x) { return edge_alpha(ssh_spec(11, -1, x), x); };
    const cplx fd_a = (alpha(l + h) - alpha(l - h)) / (2 * h);
    wa = std::max(wa, rel_err(ssh_dalpha(alpha(l), l, StateKind::kInGap), fd_a));

    for (int band : {0, 1}) {
      const auto [dp, dm] = ssh_dbloch(bulk, l, 0.0, ssh_energy(bulk, l, band));
      const BlochPair up = ssh_bloch(bulk, l + h, band), dn = ssh_bloch(bulk, l - h, band);
      wb = std::max(wb, rel_err(dp[1], (up.phi_plus[1] - dn.phi_plus[1]) / (2 * h)));
      wb = std::max(wb, rel_err(dm[1], (up.phi_minus[1] - dn.phi_minus[1]) / (2 * h)));
    }

    const LatticeSpec spec = ssh_spec(11, -1, l);
    const EigenStateRecord s = in_gap_state(spec, l);
    const double fd_n = (in_gap_state(ssh_spec(11, -1, l + h), l + h).norm -
                         in_gap_state(ssh_spec(11, -1, l - h), l - h).norm) / (2 * h);
    wn = std::max(wn, rel_err(derivative_bundle(s, spec, l).d_norm, fd_n));
  }
  return {wa <= 1e-6 && wb <= 1e-6 && wn <= 1e-6,
          fmt("max relative error on 20 lambdas: d alpha %.1e, d phi %.1e, d N %.1e (bound 1e-6)", wa, wb, wn)};
}

Outcome c9_structure() {
  double ah = 0.0, diag = 0.0, action = 0.0;
  for (double l : {0.9, 0.1, 1e-2}) {
    const LatticeSpec spec = ssh_spec(11, -1, l);
    const GaugePotentialMatrix f = full_cd(spec, l);
    const GaugePotentialMatrix t = targeted_cd(spec, l);
    ah = std::max(ah, f.antihermitian_residual);
    diag = std::max({diag, f.diagonal_residual, t.diagonal_residual});
    const EigenDecomposition eig = eigh(build_hamiltonian(spec));
    for (int n = 0; n < spec.sites(); ++n) {
      const CVector psi = eig.vectors.col(n);
      const CVector want = cplx(0.0, 1.0) * fd_transported_derivative(11, -1, l, psi, eig.values(n));
      action = std::max(action, (f.matrix.matrix() * psi - want).norm());
    }
  }
  return {ah <= 1e-10 && diag <= 1e-10 && action <= 1e-6,
          fmt("anti-Hermitian %.1e, diagonal %.1e (relative, bound 1e-10), generator action %.1e (bound 1e-6)", ah,
              diag, action)};
}

Outcome c10_norm_peak() {
  const double lo = frobenius_norm(full_cd(ssh_spec(101, -1, 0.9), 0.9).matrix);
  const double hi = frobenius_norm(full_cd(ssh_spec(101, -1, 1e-3), 1e-3).matrix);
  return {hi >= 10 * lo, fmt("||A(1e-3)|| / ||A(0.9)|| = %.2f / %.3f = %.1f (bound 10)", hi, lo, hi / lo)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"analytic/numeric eigenbasis equivalence", c1_basis},
      {"edge-mode parameter", c2_edge_alpha},
      {"bare transfer fidelity", c3_bare},
      {"CD exactness", c4_cd_exact},
      {"gap formula", c5_gap_formula},
      {"targeted-CD gap ratio", c6_gap_ratio},
      {"truncation recovery", c7_truncation},
      {"derivative oracles", c8_derivatives},
      {"CD structural invariants", c9_structure},
      {"norm peak", c10_norm_peak},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
