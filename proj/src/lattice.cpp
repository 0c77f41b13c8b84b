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

#include "latticecd/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "latticecd/error.hpp"

namespace latticecd {

LatticeSpec::LatticeSpec(int x0, int L, std::vector<cplx> hopping,
                         std::vector<double> potential, int tau)
    : x0_(x0), L_(L), hopping_(std::move(hopping)), potential_(std::move(potential)),
      tau_(tau) {
  const long m = static_cast<long>(L) - x0 - 1;
  if (m < 2) {
    throw InvalidArgument("lattice needs at least 2 sites, got L - x0 - 1 = " +
                          std::to_string(m));
  }
  if (static_cast<long>(hopping_.size()) != m - 1) {
    throw InvalidArgument("expected " + std::to_string(m - 1) + " hoppings, got " +
                          std::to_string(hopping_.size()));
  }
  if (static_cast<long>(potential_.size()) != m) {
    throw InvalidArgument("expected " + std::to_string(m) + " on-site potentials, got " +
                          std::to_string(potential_.size()));
  }
  if (tau_ < 1) throw InvalidArgument("unit-cell period must be positive");
  for (const auto& t : hopping_) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()))
      throw InvalidArgument("non-finite hopping amplitude");
  }
  for (double mu : potential_) {
    if (!std::isfinite(mu)) throw InvalidArgument("non-finite on-site potential");
  }
}

cplx LatticeSpec::hopping_at(int x) const {
  const int b = x - x0_ - 1;
  if (b < 0 || b >= bonds()) throw InvalidArgument("no bond at site " + std::to_string(x));
  return hopping_[b];
}

double LatticeSpec::potential_at(int x) const { return potential_[index_of(x)]; }

int LatticeSpec::index_of(int x) const {
  const int i = x - x0_ - 1;
  if (i < 0 || i >= sites()) throw InvalidArgument("site " + std::to_string(x) + " outside lattice");
  return i;
}

int LatticeSpec::site_of(int index) const {
  if (index < 0 || index >= sites()) throw InvalidArgument("row index out of range");
  return x0_ + 1 + index;
}

double ssh_hopping(int x, double lambda) noexcept {
  const bool even = (x % 2) == 0;  // also correct for negative x
  return even ? 1.0 - lambda : 1.0 + lambda;
}

LatticeSpec ssh_spec(int L, int x0, double lambda) {
  if (!std::isfinite(lambda)) throw InvalidArgument("lambda must be finite");
  const long m = static_cast<long>(L) - x0 - 1;
  if (m < 2) {
    throw InvalidArgument("SSH chain needs at least 2 sites, got L - x0 - 1 = " +
                          std::to_string(m));
  }
  std::vector<cplx> hopping;
  hopping.reserve(m - 1);
  for (int x = x0 + 1; x <= L - 2; ++x) hopping.emplace_back(ssh_hopping(x, lambda), 0.0);
  return LatticeSpec(x0, L, std::move(hopping), std::vector<double>(m, 0.0), 2);
}

bool is_ssh(const LatticeSpec& spec, double lambda) {
  if (spec.tau() != 2) return false;
  for (int x = spec.first_site(); x < spec.last_site(); ++x) {
    if (std::abs(spec.hopping_at(x) - cplx(ssh_hopping(x, lambda), 0.0)) > 1e-14) return false;
  }
  return std::all_of(spec.potential().begin(), spec.potential().end(),
                     [](double mu) { return mu == 0.0; });
}

HermitianMatrix::HermitianMatrix(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InvalidArgument("matrix must be square");
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  return HermitianMatrix(CMatrix::Zero(dim, dim));
}

double HermitianMatrix::max_abs() const {
  return m_.size() == 0 ? 0.0 : m_.cwiseAbs().maxCoeff();
}

double HermitianMatrix::hermiticity_defect() const {
  return m_.size() == 0 ? 0.0 : (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

HermitianMatrix build_hamiltonian(const LatticeSpec& spec) {
  const int m = spec.sites();
  CMatrix h = CMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) h(i, i) = spec.potential()[i];
  for (int b = 0; b < spec.bonds(); ++b) {
    h(b, b + 1) = spec.hopping()[b];
    h(b + 1, b) = std::conj(spec.hopping()[b]);
  }
  return HermitianMatrix(std::move(h));
}

Hermitized hermitize(const CMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("hermitize needs a square matrix");
  const double residual = m.size() == 0 ? 0.0 : (m - m.adjoint()).cwiseAbs().maxCoeff();
  CMatrix sym = 0.5 * (m + m.adjoint());
  return {HermitianMatrix(std::move(sym)), residual};
}

Hermitized hermitize(const HermitianMatrix& m) { return hermitize(m.matrix()); }

}  // namespace latticecd
