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

// Open-boundary one-dimensional tight-binding chains.
//
// Sites carry their physical label x in (x0, L); both x0 and L are hard
// walls where the wave function vanishes. Row i of every matrix corresponds
// to site x = x0 + 1 + i.
//
// Hopping convention: hopping[b] is the literal coefficient of
// b^dagger_x b_{x+1} for bond b = x - x0 - 1. The textbook form
// H = sum(-J_x b^dagger_x b_{x+1} + h.c. + mu_x n_x) maps onto it as
// J_x = -hopping[b]. The SSH chain uses +t_x = 1 - lambda (-1)^x directly.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace latticecd {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

class LatticeSpec {
 public:
  /// Throws InvalidArgument unless L - x0 - 1 >= 2, the hopping list has one
  /// entry per bond, the potential list one entry per site, and tau >= 1.
  LatticeSpec(int x0, int L, std::vector<cplx> hopping, std::vector<double> potential,
              int tau);

  int x0() const noexcept { return x0_; }
  int L() const noexcept { return L_; }
  int tau() const noexcept { return tau_; }
  int sites() const noexcept { return L_ - x0_ - 1; }
  int bonds() const noexcept { return sites() - 1; }

  const std::vector<cplx>& hopping() const noexcept { return hopping_; }
  const std::vector<double>& potential() const noexcept { return potential_; }

  /// Hopping on the bond (x, x+1), addressed by physical site label.
  cplx hopping_at(int x) const;
  double potential_at(int x) const;

  int index_of(int x) const;
  int site_of(int index) const;
  int first_site() const noexcept { return x0_ + 1; }
  int last_site() const noexcept { return L_ - 1; }

  /// phi(L) = phi(x0) for tau-periodic Bloch functions.
  bool commensurate() const noexcept { return (L_ - x0_) % tau_ == 0; }

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  int x0_;
  int L_;
  std::vector<cplx> hopping_;
  std::vector<double> potential_;
  int tau_;
};

/// SSH chain with hopping 1 - lambda (-1)^x on bond (x, x+1) and no on-site
/// potential. |lambda| >= 1 is accepted (a bond vanishes or flips sign);
/// solvers that need a gapped two-band model reject it themselves.
LatticeSpec ssh_spec(int L, int x0, double lambda);

/// SSH hopping on bond (x, x+1).
double ssh_hopping(int x, double lambda) noexcept;

/// True if spec is the SSH chain at lambda: hoppings within 1e-14, no
/// potential, 2-site cell.
bool is_ssh(const LatticeSpec& spec, double lambda);

/// Dense Hermitian matrix. Construction does not enforce Hermiticity; use
/// hermitize() to symmetrize a matrix assembled from floating-point sums.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(CMatrix m);
  static HermitianMatrix zero(int dim);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  cplx operator()(int i, int j) const { return m_(i, j); }

  /// Largest entry modulus.
  double max_abs() const;
  /// max |m_ij - conj(m_ji)|.
  double hermiticity_defect() const;

 private:
  CMatrix m_;
};

/// Tridiagonal Hamiltonian of the chain with hard walls at x0 and L.
HermitianMatrix build_hamiltonian(const LatticeSpec& spec);

struct Hermitized {
  HermitianMatrix matrix;
  /// max |m_ij - conj(m_ji)| before symmetrization.
  double residual;
};

Hermitized hermitize(const CMatrix& m);
Hermitized hermitize(const HermitianMatrix& m);

}  // namespace latticecd
