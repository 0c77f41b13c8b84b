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

// Exact counterdiabatic generators assembled from the analytic states.
//
// Generators are lambda-dot free: the driven Hamiltonian is
// H(lambda) + lambda_dot * A(lambda). Derivatives of the states are taken in
// the parallel-transport gauge (the Berry connection <psi|d psi> is removed),
// so theta_alpha = P_perp |d psi><psi| and the generators have a zero
// diagonal.

#include <utility>
#include <vector>

#include "latticecd/analytic_states.hpp"

namespace latticecd {

enum class CdMode { kNone, kFull, kTargeted };

const char* to_string(CdMode mode) noexcept;

/// d/dlambda data of one state.
struct DerivativeBundle {
  cplx d_alpha;
  std::vector<cplx> d_phi_plus;   // per unit-cell component
  std::vector<cplx> d_phi_minus;
  double d_norm = 0.0;
  CVector A;        // A_alpha(x), includes d_norm / N
  CVector B;        // B_alpha(x)
  CVector A_tilde;  // A - d_norm / N
  CVector B_tilde;
  cplx connection;  // <psi | d psi> before the gauge is transported
  CVector d_psi;    // d psi - connection psi
};

struct GaugePotentialMatrix {
  HermitianMatrix matrix;
  CdMode mode = CdMode::kFull;
  double lambda = 0.0;
  /// max |m - m^dagger| / max |m| before hermitizing (full mode).
  double antihermitian_residual = 0.0;
  /// max |m_xx| / max |m| before the diagonal was cleared.
  double diagonal_residual = 0.0;
};

/// d alpha / d lambda. Zero for commensurate bulk states; for the in-gap
/// state, obtained by differentiating the local Schroedinger equation.
/// Throws SingularError for an in-gap state at lambda in {0, +-1}.
cplx ssh_dalpha(cplx alpha, double lambda, StateKind kind);

/// d/dlambda of the SSH Bloch functions (first components stay 1, so their
/// derivative is 0). Throws SingularError for E = 0.
std::pair<std::vector<cplx>, std::vector<cplx>> ssh_dbloch(cplx alpha, double lambda,
                                                          cplx d_alpha, double energy);

/// dN/dlambda = -1/2 N^3 sum(psi~* d psi~ + c.c.) where
/// d psi~ = plus_part * A_tilde - minus_part * B_tilde.
double d_norm(const EigenStateRecord& state, const CVector& a_tilde, const CVector& b_tilde);

/// Derivative data for a state of the SSH chain at lambda.
DerivativeBundle derivative_bundle(const EigenStateRecord& state, const LatticeSpec& spec,
                                   double lambda);

/// theta_alpha(x, x') = |N|^2 psi~*(x') [phi_+ alpha^x A - ratio phi_- alpha^(2L-x) B](x),
/// with the connection term removed; equals d_psi(x) conj(psi(x')).
CMatrix theta(const EigenStateRecord& state, const DerivativeBundle& bundle,
              const LatticeSpec& spec);

/// i sum_alpha theta_alpha over the full analytic basis, hermitized, with
/// the diagonal cleared. Throws if the anti-Hermitian residual or the
/// diagonal exceeds 1e-8 relative (a broken basis).
GaugePotentialMatrix full_cd(const LatticeSpec& spec, double lambda);

/// i (theta_alpha - theta_alpha^dagger) for a single state.
GaugePotentialMatrix targeted_cd(const EigenStateRecord& state, const DerivativeBundle& bundle,
                                 const LatticeSpec& spec, double lambda);

/// Targeted generator for the in-gap state of the SSH chain at lambda.
GaugePotentialMatrix targeted_cd(const LatticeSpec& spec, double lambda);

/// Dispatch on mode (kNone gives the zero matrix).
HermitianMatrix cd_generator(const LatticeSpec& spec, double lambda, CdMode mode);

}  // namespace latticecd
