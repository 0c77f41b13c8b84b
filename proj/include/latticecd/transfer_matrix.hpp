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

// Bloch functions for a general tau-periodic chain by propagating the
// plane-wave ansatz through one unit cell. Not used to build CD terms; it
// cross-checks the SSH closed forms and provides derivatives for models
// without them.

#include <functional>

#include "latticecd/analytic_states.hpp"

namespace latticecd {

using SpecBuilder = std::function<LatticeSpec(double)>;

/// First bulk cell: smallest x >= x0 + 2 with x = 0 (mod tau) whose cell
/// has bonds on both sides.
int bulk_cell_start(const LatticeSpec& spec);

/// (psi(x + tau), psi(x + tau - 1)) = T (psi(x), psi(x - 1)) for the cell
/// starting at cell_start.
Eigen::Matrix2cd cell_transfer_matrix(const LatticeSpec& spec, double energy, int cell_start);

/// det(T(E) - alpha^tau): zero iff (alpha, E) lies on the dispersion.
cplx dispersion_residual(const LatticeSpec& spec, cplx alpha, double energy);

/// Newton refinement of E on the dispersion at fixed unit-modulus alpha.
double refine_energy(const LatticeSpec& spec, cplx alpha, double guess);

/// Bloch pair at (alpha, E), gauge phi_+(0) = phi_-(0) = 1.
BlochPair transfer_matrix_bloch(const LatticeSpec& spec, cplx alpha, double energy);

struct BlochDerivative {
  std::vector<cplx> d_phi_plus;
  std::vector<cplx> d_phi_minus;
  double d_energy = 0.0;
};

/// d/dlambda of the Bloch data at fixed alpha (commensurate bulk state):
/// central differences with one Richardson step, h = 1e-5 max(1, |lambda|).
BlochDerivative bloch_derivative_fd(const SpecBuilder& builder, double lambda, cplx alpha,
                                    double energy_guess);

}  // namespace latticecd
