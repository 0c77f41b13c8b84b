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

#include "latticecd/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "latticecd/error.hpp"
#include "latticecd/spectral.hpp"

namespace latticecd {
namespace {

std::string fmt_t(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", t);
  return buf;
}

CVector target_state(const SpecBuilder& builder, double lambda) {
  const LatticeSpec spec = builder(lambda);
  return in_gap_state(spec, lambda).coeffs;
}

}  // namespace

double Protocol::lambda_at(double t) const {
  if (t <= 0.0) return lambda0;
  if (t >= total_time) return lambdaf;
  return lambda0 + (lambdaf - lambda0) * (t / total_time);
}

void Protocol::validate() const {
  if (!std::isfinite(total_time) || total_time <= 0.0) {
    throw InvalidArgument("total_time must be positive and finite");
  }
  if (!std::isfinite(lambda0) || !std::isfinite(lambdaf)) {
    throw InvalidArgument("lambda endpoints must be finite");
  }
  if (band_limit && cd_mode == CdMode::kNone) {
    throw InvalidArgument("band_limit requires a CD mode");
  }
  if (band_limit && *band_limit < 0) throw InvalidArgument("band_limit must be >= 0");
}

SpecBuilder ssh_builder(int L, int x0) {
  return [L, x0](double lambda) { return ssh_spec(L, x0, lambda); };
}

double fidelity(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("fidelity: size mismatch");
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  if (na == 0.0 || nb == 0.0) throw InvalidArgument("fidelity: zero vector");
  return std::norm(a.dot(b)) / (na * nb);
}

HermitianMatrix band_limit(const HermitianMatrix& m, int d) {
  const int n = m.dim();
  if (d < 0 || d > n - 1) {
    throw InvalidArgument("band_limit: d = " + std::to_string(d) + " outside [0, " +
                          std::to_string(n - 1) + "]");
  }
  CMatrix out = m.matrix();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (std::abs(i - j) > d) out(i, j) = 0.0;
    }
  }
  return HermitianMatrix(std::move(out));
}

EvolutionResult propagate(const SpecBuilder& builder, const Protocol& protocol, double dt,
                          const TraceObserver& observer) {
  protocol.validate();
  if (!std::isfinite(dt) || dt <= 0.0) throw InvalidArgument("dt must be positive and finite");
  const double ratio = std::ceil(protocol.total_time / dt - 1e-9);
  if (ratio > 1e8) throw InvalidArgument("dt too small for total_time");
  int steps = std::max(2, static_cast<int>(ratio));
  if (steps % 2 != 0) ++steps;
  const double h = protocol.total_time / steps;
  const double rate = protocol.lambda_dot();

  CVector psi = target_state(builder, protocol.lambda0);
  const int m = static_cast<int>(psi.size());

  auto observe = [&](double t) {
    if (!observer) return;
    const double lambda = protocol.lambda_at(t);
    const LatticeSpec spec = builder(lambda);
    TracePoint p;
    p.t = t;
    p.lambda = lambda;
    p.norm = psi.norm();
    p.energy = psi.dot(build_hamiltonian(spec).matrix() * psi).real();
    // The zero mode stays well defined at lambda = 0, where alpha is not.
    p.fidelity_to_instantaneous = fidelity(sublattice_zero_mode(spec), psi);
    observer(p);
  };
  observe(0.0);

  for (int k = 0; k < steps; ++k) {
    const double t_mid = (k + 0.5) * h;
    const double lambda = protocol.lambda_at(t_mid);
    const LatticeSpec spec = builder(lambda);
    if (spec.sites() != m) throw InvalidArgument("spec builder changed the lattice size");
    CMatrix total = build_hamiltonian(spec).matrix();
    if (protocol.cd_mode != CdMode::kNone) {
      HermitianMatrix gen;
      try {
        gen = cd_generator(spec, lambda, protocol.cd_mode);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kSingular && e.code() != ErrorCode::kDomain) throw;
        throw SingularError("CD generator singular at t = " + fmt_t(t_mid) +
                            " (lambda = " + fmt_t(lambda) + "): " + e.what());
      }
      if (protocol.band_limit) gen = band_limit(gen, std::min(*protocol.band_limit, m - 1));
      total += rate * gen.matrix();
    }
    if (!total.allFinite()) {
      throw SingularError("non-finite Hamiltonian at t = " + fmt_t(t_mid));
    }
    const EigenDecomposition eig = eigh(HermitianMatrix(std::move(total)));
    CVector c = eig.vectors.adjoint() * psi;
    for (int i = 0; i < m; ++i) c(i) *= std::polar(1.0, -eig.values(i) * h);
    psi = eig.vectors * c;
    observe((k + 1 == steps) ? protocol.total_time : (k + 1) * h);
  }

  EvolutionResult out;
  out.steps = steps;
  out.norm_drift = std::abs(psi.norm() - 1.0);
  out.fidelity = fidelity(target_state(builder, protocol.lambdaf), psi);
  out.final_state = std::move(psi);
  return out;
}

SweepResult convergence_sweep(const SpecBuilder& builder, const Protocol& protocol, double dt0,
                              double tol, int max_halvings) {
  if (!std::isfinite(dt0) || dt0 <= 0.0) throw InvalidArgument("dt0 must be positive and finite");
  SweepResult out;
  double dt = dt0;
  for (int i = 0; i <= max_halvings; ++i, dt /= 2.0) {
    out.final_run = propagate(builder, protocol, dt);
    out.points.push_back({dt, out.final_run.steps, out.final_run.fidelity, out.final_run.norm_drift});
    const std::size_t n = out.points.size();
    if (n >= 2 && std::abs(out.points[n - 1].fidelity - out.points[n - 2].fidelity) < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace latticecd
