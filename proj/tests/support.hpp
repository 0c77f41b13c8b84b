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

// Independent oracles shared by the unit and acceptance tests: dense
// diagonalization with phase alignment, and central finite differences.

#include <algorithm>
#include <cmath>
#include <vector>

#include "latticecd/analytic_states.hpp"
#include "latticecd/spectral.hpp"

namespace latticecd::testing {

// Numeric eigenvector closest in energy to `energy`, rotated so its overlap
// with `reference` is real and positive.
inline CVector aligned_eigenvector(const LatticeSpec& spec, double energy, const CVector& reference) {
  const EigenDecomposition eig = eigh(build_hamiltonian(spec));
  Eigen::Index best = 0;
  (eig.values.array() - energy).abs().minCoeff(&best);
  CVector v = eig.vectors.col(best);
  const cplx overlap = v.dot(reference);
  return v * (overlap / std::abs(overlap));
}

// P_perp d psi / d lambda of the eigenstate of the SSH chain at lambda,
// from gauge-aligned numeric eigenvectors at lambda +- h.
inline CVector fd_transported_derivative(int L, int x0, double lambda, const CVector& psi, double energy,
                                         double h = 1e-6) {
  // Energies move by O(h); pick by continuity from the center energy.
  const CVector up = aligned_eigenvector(ssh_spec(L, x0, lambda + h), energy, psi);
  const CVector dn = aligned_eigenvector(ssh_spec(L, x0, lambda - h), energy, psi);
  CVector d = (up - dn) / (2.0 * h);
  return d - psi.dot(d) * psi;
}

inline double rel_err(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// The 20-point grid used by the derivative oracles: +-0.05 .. +-0.95.
inline std::vector<double> derivative_grid() {
  std::vector<double> g;
  for (int i = 0; i < 10; ++i) {
    g.push_back(0.05 + 0.1 * i);
    g.push_back(-(0.05 + 0.1 * i));
  }
  return g;
}

}  // namespace latticecd::testing
