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

// Closed-form eigenstates of open chains.
//
// Every state is written as
//
//   psi(x) = N [ phi_+(x) alpha^x  -  (phi_+(L) / phi_-(L)) phi_-(x) alpha^(2L - x) ]
//
// with tau-periodic Bloch functions phi_+ / phi_- belonging to alpha and
// 1/alpha. Bulk states have |alpha| = 1; in-gap (edge) states have
// 0 < |alpha| < 1. For the SSH chain everything is available in closed form;
// the zero-energy edge mode is sublattice polarized and is built from the
// E -> 0 limit of the Bloch functions.

#include <optional>
#include <vector>

#include "latticecd/lattice.hpp"

namespace latticecd {

enum class StateKind { kBulk, kInGap };

/// Bloch functions over one unit cell. Component c holds phi(x) for
/// x = c (mod tau); phi(x) = phi(x + tau) extends them to any site.
struct BlochPair {
  std::vector<cplx> phi_plus;
  std::vector<cplx> phi_minus;
  /// Set for the E = 0 limit: each function then lives on a single
  /// sublattice (the component index stored here), the other entry is 0.
  std::optional<int> plus_sublattice;
  std::optional<int> minus_sublattice;

  bool polarized() const noexcept { return plus_sublattice.has_value(); }
  cplx plus_at(int x) const;
  cplx minus_at(int x) const;
};

struct EigenStateRecord {
  cplx alpha;
  int band = 0;  // s in E = (-1)^s |E|
  double energy = 0.0;
  CVector coeffs;     // normalized psi(x), row i <-> site x0 + 1 + i
  double norm = 0.0;  // N > 0
  StateKind kind = StateKind::kBulk;
  BlochPair bloch;
  // Unnormalized pieces: coeffs = norm * (plus_part - minus_part).
  CVector plus_part;
  CVector minus_part;
  /// For polarized states: the edge site where psi~ = 1.
  std::optional<int> reference_site;
  /// max(|psi(x0)|, |psi(L)|) of the analytic continuation (bulk states).
  double boundary_residual = 0.0;

  /// arg(alpha) in [0, pi]; pi/2 for the in-gap state.
  double quasimomentum() const;
};

/// k_n = pi n / (L - x0), n = 1 .. L - x0 - 1. Throws UnsupportedPath for a
/// non-commensurate chain.
std::vector<double> bulk_quasimomenta(const LatticeSpec& spec);

/// SSH band energy for alpha on the unit circle or the imaginary axis.
/// Throws DomainError if the radicand is negative or alpha lies elsewhere
/// with a complex radicand.
double ssh_energy(cplx alpha, double lambda, int band);

/// Bloch functions of the SSH chain (component 0 = even sites). For E = 0
/// the sublattice-polarized limit is returned; E = 0 at an alpha that is
/// not an edge root throws SingularError.
BlochPair ssh_bloch(cplx alpha, double lambda, int band);

/// Recovers lambda from an SSH spec; throws InvalidArgument otherwise.
double ssh_lambda_of(const LatticeSpec& spec);

/// In-gap mode parameter alpha = i a, 0 < a < 1, found by bisection on the
/// local Schroedinger equation at the edge next to the weaker bond.
cplx edge_alpha(const LatticeSpec& spec, double lambda);

/// a = sqrt((1 - |lambda|) / (1 + |lambda|)).
double edge_alpha_closed_form(double lambda);

/// Local-equation residual used by edge_alpha, multiplied through by E so
/// it stays finite at the zero mode. Monotone increasing in a.
double edge_residual(double a, double lambda);

/// Builds the normalized state; band is derived from the sign of energy.
EigenStateRecord assemble_state(const LatticeSpec& spec, const BlochPair& bloch, cplx alpha,
                                double energy);

/// alpha^(2(L - x0)) - phi_+(x0) phi_-(L) / (phi_+(L) phi_-(x0)) for the SSH
/// chain described by spec. Throws SingularError if a Bloch component in
/// the ratio vanishes (as it does for the polarized zero mode).
cplx quantization_residual(const LatticeSpec& spec, cplx alpha);
cplx quantization_residual(const LatticeSpec& spec, const BlochPair& bloch, cplx alpha);

/// The analytic in-gap state at lambda.
EigenStateRecord in_gap_state(const LatticeSpec& spec, double lambda);

/// All M states of a commensurate odd-length SSH chain, sorted by
/// (energy, quasimomentum).
std::vector<EigenStateRecord> full_basis(const LatticeSpec& spec, double lambda);

/// Zero mode of any odd-length chain with nonvanishing hoppings and no
/// on-site potential, from the two-site recursion
/// psi(y+1) = -conj(t_{y-1}) psi(y-1) / t_y. Independent of the Bloch
/// machinery; also valid at lambda = 0. Largest component is real positive.
CVector sublattice_zero_mode(const LatticeSpec& spec);

}  // namespace latticecd
