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

#pragma once

// Time evolution of the edge state under a linear ramp of lambda.

#include <functional>
#include <optional>
#include <vector>

#include "latticecd/cd_engine.hpp"
#include "latticecd/transfer_matrix.hpp"

namespace latticecd {

struct Protocol {
  double lambda0 = 0.9;
  double lambdaf = -0.9;
  double total_time = 1.0;
  CdMode cd_mode = CdMode::kNone;
  std::optional<int> band_limit;  // keep |i - j| <= d of the CD generator

  double lambda_dot() const { return (lambdaf - lambda0) / total_time; }
  /// lambda(t); exact at both endpoints.
  double lambda_at(double t) const;
  /// Throws InvalidArgument for a non-positive or non-finite time, non-finite
  /// endpoints, or a band limit without CD.
  void validate() const;
};

struct EvolutionResult {
  CVector final_state;
  double fidelity = 0.0;
  double norm_drift = 0.0;
  int steps = 0;
};

struct TracePoint {
  double t = 0.0;
  double lambda = 0.0;
  double fidelity_to_instantaneous = 0.0;
  double norm = 0.0;
  double energy = 0.0;  // <psi|H(lambda)|psi>, CD terms excluded
};

using TraceObserver = std::function<void(const TracePoint&)>;

/// SSH chain builder for fixed (L, x0).
SpecBuilder ssh_builder(int L, int x0);

/// Starts from the analytic in-gap state at lambda0 and steps with the
/// exact unitary of the midpoint Hamiltonian H + lambda_dot A. The step
/// count is ceil(total_time / dt) rounded up to even, so a symmetric ramp
/// never evaluates the generator at its midpoint. Fidelity is measured
/// against the in-gap state at lambdaf. A singular generator aborts with
/// SingularError naming t.
EvolutionResult propagate(const SpecBuilder& builder, const Protocol& protocol, double dt,
                          const TraceObserver& observer = {});

/// |<a|b>|^2 / (|a|^2 |b|^2). Throws InvalidArgument for a zero vector or a
/// size mismatch.
double fidelity(const CVector& a, const CVector& b);

/// Zeroes entries with |i - j| > d. Throws InvalidArgument unless
/// 0 <= d <= dim - 1.
HermitianMatrix band_limit(const HermitianMatrix& m, int d);

struct SweepPoint {
  double dt = 0.0;
  int steps = 0;
  double fidelity = 0.0;
  double norm_drift = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  bool converged = false;
  EvolutionResult final_run;  // at the last dt tried
};

/// Halves dt from dt0 until successive fidelities differ by less than tol
/// (at most max_halvings times).
SweepResult convergence_sweep(const SpecBuilder& builder, const Protocol& protocol, double dt0,
                              double tol = 1e-10, int max_halvings = 12);

}  // namespace latticecd
