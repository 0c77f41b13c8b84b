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

#include "latticecd/certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "latticecd/cd_engine.hpp"
#include "latticecd/dynamics.hpp"
#include "latticecd/error.hpp"
#include "latticecd/spectral.hpp"

namespace latticecd {
namespace {

// Runs body; a thrown Error becomes a failed check carrying the message.
CheckResult run_check(const std::string& name, double bound,
                      const std::function<double(std::string&)>& body,
                      bool lower_bound = false) {
  CheckResult r;
  r.name = name;
  r.bound = bound;
  try {
    r.value = body(r.detail);
    r.passed = lower_bound ? r.value >= bound : r.value <= bound;
  } catch (const std::exception& e) {
    r.passed = false;
    r.value = std::nan("");
    r.detail = e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> certify(const CertifyOptions& opt) {
  if (opt.sites < 3 || opt.sites % 2 == 0) throw InvalidArgument("certify needs an odd site count >= 3");
  const int L = opt.sites;  // x0 = -1
  const int x0 = -1;
  const double lambda_mid = 0.5 * (opt.lambda0 + opt.lambdaf) == 0.0
                                ? 0.5 * opt.lambda0
                                : 0.5 * (opt.lambda0 + opt.lambdaf);
  const std::vector<double> probes = {opt.lambda0, lambda_mid, opt.lambdaf};
  std::vector<CheckResult> out;

  out.push_back(run_check("basis_residual", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : probes) {
      const LatticeSpec spec = ssh_spec(L, x0, lambda);
      const CMatrix h = build_hamiltonian(spec).matrix();
      for (const auto& s : full_basis(spec, lambda)) {
        worst = std::max(worst, (h * s.coeffs - s.energy * s.coeffs).cwiseAbs().maxCoeff());
      }
    }
    return worst;
  }));

  out.push_back(run_check("basis_energies_vs_eigh", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : probes) {
      const LatticeSpec spec = ssh_spec(L, x0, lambda);
      const auto basis = full_basis(spec, lambda);
      std::vector<double> e;
      for (const auto& s : basis) e.push_back(s.energy);
      std::sort(e.begin(), e.end());
      const EigenDecomposition eig = eigh(build_hamiltonian(spec));
      for (std::size_t i = 0; i < e.size(); ++i) worst = std::max(worst, std::abs(e[i] - eig.values(i)));
    }
    return worst;
  }));

  out.push_back(run_check("edge_alpha_closed_form", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : probes) {
      const cplx a = edge_alpha(ssh_spec(L, x0, lambda), lambda);
      worst = std::max(worst, std::abs(a.imag() - edge_alpha_closed_form(lambda)));
    }
    return worst;
  }));

  double cd_diag = 0.0;
  out.push_back(run_check("cd_antihermitian_residual", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : probes) {
      const GaugePotentialMatrix g = full_cd(ssh_spec(L, x0, lambda), lambda);
      worst = std::max(worst, g.antihermitian_residual);
      cd_diag = std::max(cd_diag, g.diagonal_residual);
      const GaugePotentialMatrix t = targeted_cd(ssh_spec(L, x0, lambda), lambda);
      cd_diag = std::max(cd_diag, t.diagonal_residual);
    }
    return worst;
  }));
  out.push_back(run_check("cd_diagonal", 1e-10, [&](std::string&) { return cd_diag; }));

  out.push_back(run_check("gap_formula_vs_eigh", 1e-10, [&](std::string&) {
    double worst = 0.0;
    for (double lambda : probes) {
      const EigenDecomposition eig = eigh(build_hamiltonian(ssh_spec(L, x0, lambda)));
      worst = std::max(worst, std::abs(gap_to_zero_mode(eig.values) - ssh_gap_formula(lambda, L)));
    }
    return worst;
  }));

  const SpecBuilder builder = ssh_builder(L, x0);
  const double dt0 = opt.total_time / 400.0;
  double drift = 0.0;
  for (CdMode mode : {CdMode::kNone, CdMode::kFull, CdMode::kTargeted}) {
    Protocol p{opt.lambda0, opt.lambdaf, opt.total_time, mode, std::nullopt};
    SweepResult sweep;
    out.push_back(run_check(std::string("sweep_") + to_string(mode), 0.0, [&](std::string& detail) {
      sweep = convergence_sweep(builder, p, dt0);
      for (const auto& pt : sweep.points) drift = std::max(drift, pt.norm_drift);
      const SweepPoint& last = sweep.points.back();
      detail = "dt=" + std::to_string(last.dt) + " steps=" + std::to_string(last.steps) +
               " F=" + std::to_string(last.fidelity) + (sweep.converged ? "" : " not converged");
      const std::size_t n = sweep.points.size();
      return n >= 2 && sweep.converged ? std::abs(sweep.points[n - 1].fidelity - sweep.points[n - 2].fidelity) - 1e-10
                                       : 1.0;
    }));
    if (mode != CdMode::kNone) {
      out.push_back(run_check(std::string("fidelity_") + to_string(mode), 1.0 - 1e-6,
                              [&](std::string&) { return sweep.final_run.fidelity; }, true));
    }
  }
  out.push_back(run_check("norm_drift", 1e-8, [&](std::string&) { return drift; }));
  return out;
}

}  // namespace latticecd
