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

#include "latticecd/transfer_matrix.hpp"

#include <cmath>

#include "latticecd/error.hpp"

namespace latticecd {
namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

cplx ipow(cplx alpha, int n) {
  return std::polar(std::pow(std::abs(alpha), n), n * std::arg(alpha));
}

std::vector<cplx> cell_bloch(const LatticeSpec& spec, cplx alpha, double energy) {
  const int tau = spec.tau();
  const int cs = bulk_cell_start(spec);
  const Eigen::Matrix2cd t = cell_transfer_matrix(spec, energy, cs);
  const cplx mu = ipow(alpha, tau);
  const Eigen::Matrix2cd shifted = t - mu * Eigen::Matrix2cd::Identity();

  const double scale = t.cwiseAbs().maxCoeff() + std::abs(mu);
  if (std::abs(shifted.determinant()) > 1e-8 * scale * scale) {
    throw DomainError("(alpha, E) is not on the dispersion of this chain");
  }
  // Null vector of the better-conditioned row.
  Eigen::Vector2cd v;
  if (shifted.row(0).cwiseAbs().sum() >= shifted.row(1).cwiseAbs().sum()) {
    v << -shifted(0, 1), shifted(0, 0);
  } else {
    v << -shifted(1, 1), shifted(1, 0);
  }
  if (v.norm() == 0.0) v << 1.0, 1.0 / alpha;  // T = mu I

  std::vector<cplx> psi(tau + 1);
  cplx prev = v(1), cur = v(0);
  for (int j = 0; j < tau; ++j) {
    const int x = cs + j;
    psi[j] = cur;
    const cplx t_x = spec.hopping_at(x);
    const cplx next = ((energy - spec.potential_at(x)) * cur - std::conj(spec.hopping_at(x - 1)) * prev) / t_x;
    prev = cur;
    cur = next;
  }
  std::vector<cplx> phi(tau);
  for (int j = 0; j < tau; ++j) phi[mod(cs + j, tau)] = psi[j] / ipow(alpha, cs + j);
  if (std::abs(phi[0]) == 0.0) throw SingularError("Bloch function vanishes on cell site 0");
  const cplx gauge = phi[0];
  for (auto& p : phi) p /= gauge;
  return phi;
}

}  // namespace

int bulk_cell_start(const LatticeSpec& spec) {
  const int tau = spec.tau();
  int cs = spec.x0() + 2;
  while (mod(cs, tau) != 0) ++cs;
  if (cs + tau - 1 > spec.L() - 2) {
    throw InvalidArgument("chain too short to hold a bulk unit cell");
  }
  return cs;
}

Eigen::Matrix2cd cell_transfer_matrix(const LatticeSpec& spec, double energy, int cell_start) {
  Eigen::Matrix2cd total = Eigen::Matrix2cd::Identity();
  for (int x = cell_start; x < cell_start + spec.tau(); ++x) {
    const cplx t_x = spec.hopping_at(x);
    if (std::abs(t_x) == 0.0) throw SingularError("zero hopping inside the unit cell");
    Eigen::Matrix2cd step;
    step << (energy - spec.potential_at(x)) / t_x, -std::conj(spec.hopping_at(x - 1)) / t_x,
        1.0, 0.0;
    total = step * total;
  }
  return total;
}

cplx dispersion_residual(const LatticeSpec& spec, cplx alpha, double energy) {
  const Eigen::Matrix2cd t = cell_transfer_matrix(spec, energy, bulk_cell_start(spec));
  return (t - ipow(alpha, spec.tau()) * Eigen::Matrix2cd::Identity()).determinant();
}

double refine_energy(const LatticeSpec& spec, cplx alpha, double guess) {
  const cplx mu = ipow(alpha, spec.tau());
  auto g = [&](double e) { return (dispersion_residual(spec, alpha, e) / mu).real(); };
  double e = guess;
  for (int it = 0; it < 100; ++it) {
    const double h = 1e-7 * std::max(1.0, std::abs(e));
    const double slope = (g(e + h) - g(e - h)) / (2.0 * h);
    if (slope == 0.0) throw SingularError("flat dispersion residual in energy refinement");
    const double step = g(e) / slope;
    e -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(e))) return e;
  }
  throw NotConverged("energy refinement did not converge");
}

BlochPair transfer_matrix_bloch(const LatticeSpec& spec, cplx alpha, double energy) {
  BlochPair out;
  out.phi_plus = cell_bloch(spec, alpha, energy);
  out.phi_minus = cell_bloch(spec, 1.0 / alpha, energy);
  return out;
}

BlochDerivative bloch_derivative_fd(const SpecBuilder& builder, double lambda, cplx alpha,
                                    double energy_guess) {
  struct Sample {
    BlochPair bloch;
    double energy;
  };
  auto sample = [&](double l) {
    const LatticeSpec spec = builder(l);
    const double e = refine_energy(spec, alpha, energy_guess);
    return Sample{transfer_matrix_bloch(spec, alpha, e), e};
  };
  auto central = [&](double h) {
    const Sample up = sample(lambda + h), down = sample(lambda - h);
    BlochDerivative d;
    for (std::size_t c = 0; c < up.bloch.phi_plus.size(); ++c) {
      d.d_phi_plus.push_back((up.bloch.phi_plus[c] - down.bloch.phi_plus[c]) / (2.0 * h));
      d.d_phi_minus.push_back((up.bloch.phi_minus[c] - down.bloch.phi_minus[c]) / (2.0 * h));
    }
    d.d_energy = (up.energy - down.energy) / (2.0 * h);
    return d;
  };
  const double h = 1e-5 * std::max(1.0, std::abs(lambda));
  const BlochDerivative coarse = central(h), fine = central(0.5 * h);
  BlochDerivative out;
  for (std::size_t c = 0; c < coarse.d_phi_plus.size(); ++c) {
    out.d_phi_plus.push_back((4.0 * fine.d_phi_plus[c] - coarse.d_phi_plus[c]) / 3.0);
    out.d_phi_minus.push_back((4.0 * fine.d_phi_minus[c] - coarse.d_phi_minus[c]) / 3.0);
  }
  out.d_energy = (4.0 * fine.d_energy - coarse.d_energy) / 3.0;
  return out;
}

}  // namespace latticecd
