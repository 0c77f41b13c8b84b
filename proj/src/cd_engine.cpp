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

#include "latticecd/cd_engine.hpp"

#include <cmath>
#include <string>

#include "latticecd/error.hpp"

namespace latticecd {
namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

// Relative bound beyond which the assembled generator signals a broken basis
// rather than rounding noise.
constexpr double kAssemblyTolerance = 1e-8;

}  // namespace

const char* to_string(CdMode mode) noexcept {
  switch (mode) {
    case CdMode::kNone: return "none";
    case CdMode::kFull: return "full";
    case CdMode::kTargeted: return "targeted";
  }
  return "unknown";
}

cplx ssh_dalpha(cplx alpha, double lambda, StateKind kind) {
  if (kind == StateKind::kBulk) return 0.0;
  if (lambda == 0.0 || std::abs(lambda) == 1.0) {
    throw SingularError("d alpha / d lambda of the in-gap state is singular at lambda = " +
                        std::to_string(lambda));
  }
  const cplx a2 = alpha * alpha, a4 = a2 * a2;
  const double l3 = lambda * lambda * lambda;
  const cplx num = 1.0 + 2.0 * a2 + a4 + l3 - 2.0 * a2 * l3 + a4 * l3;
  const cplx den = lambda * (a4 - 1.0) * (lambda - 1.0) * (1.0 + lambda) * (1.0 + lambda);
  if (std::abs(den) == 0.0) throw SingularError("alpha^4 = 1 in d alpha / d lambda");
  return -alpha * num / den;
}

std::pair<std::vector<cplx>, std::vector<cplx>> ssh_dbloch(cplx alpha, double lambda,
                                                          cplx d_alpha, double energy) {
  if (energy == 0.0) {
    throw SingularError("Bloch derivative divides by E = 0; use the polarized zero-mode path");
  }
  const cplx a2 = alpha * alpha, a3 = a2 * alpha, a4 = a2 * a2;
  const cplx num = 1.0 - a4 - 4.0 * lambda * alpha * d_alpha;
  const cplx den_plus = (lambda - 1.0) * a3 - (1.0 + lambda) * alpha;
  // Mirror of den_plus under alpha -> 1/alpha, times -alpha^4.
  const cplx den_minus = (1.0 + lambda) * a3 + (1.0 - lambda) * alpha;
  return {{0.0, num / (den_plus * energy)}, {0.0, num / (den_minus * energy)}};
}

double d_norm(const EigenStateRecord& state, const CVector& a_tilde, const CVector& b_tilde) {
  const CVector psi_tilde = state.plus_part - state.minus_part;
  const CVector d_psi_tilde =
      state.plus_part.cwiseProduct(a_tilde) - state.minus_part.cwiseProduct(b_tilde);
  // sum(psi~* d psi~ + psi~ d psi~*) = 2 Re <psi~|d psi~>.
  const double n = state.norm;
  return -n * n * n * psi_tilde.dot(d_psi_tilde).real();
}

DerivativeBundle derivative_bundle(const EigenStateRecord& state, const LatticeSpec& spec,
                                   double lambda) {
  const int m = spec.sites();
  const int L = spec.L();
  DerivativeBundle b;
  b.A_tilde = CVector::Zero(m);
  b.B_tilde = CVector::Zero(m);

  if (state.bloch.polarized()) {
    // Polarized Bloch functions do not depend on lambda; only alpha moves.
    b.d_alpha = ssh_dalpha(state.alpha, lambda, StateKind::kInGap);
    b.d_phi_plus.assign(spec.tau(), 0.0);
    b.d_phi_minus.assign(spec.tau(), 0.0);
    const cplx rate = b.d_alpha / state.alpha;
    const int xs = state.reference_site.value();
    const bool left_edge = xs == spec.first_site();
    for (int i = 0; i < m; ++i) {
      const int x = spec.site_of(i);
      if (left_edge) {
        b.A_tilde(i) = static_cast<double>(x - xs) * rate;
      } else {
        b.B_tilde(i) = static_cast<double>(xs - x) * rate;
      }
    }
  } else {
    b.d_alpha = ssh_dalpha(state.alpha, lambda, state.kind);
    std::tie(b.d_phi_plus, b.d_phi_minus) = ssh_dbloch(state.alpha, lambda, b.d_alpha, state.energy);
    const int tau = spec.tau();
    auto dplus = [&](int x) { return b.d_phi_plus[mod(x, tau)]; };
    auto dminus = [&](int x) { return b.d_phi_minus[mod(x, tau)]; };
    const cplx rate = b.d_alpha / state.alpha;
    const cplx boundary = dplus(L) / state.bloch.plus_at(L) - dminus(L) / state.bloch.minus_at(L);
    for (int i = 0; i < m; ++i) {
      const int x = spec.site_of(i);
      b.A_tilde(i) = dplus(x) / state.bloch.plus_at(x) + static_cast<double>(x) * rate;
      b.B_tilde(i) = boundary + dminus(x) / state.bloch.minus_at(x) +
                     static_cast<double>(2 * L - x) * rate;
    }
  }

  b.d_norm = d_norm(state, b.A_tilde, b.B_tilde);
  const double shift = b.d_norm / state.norm;
  b.A = b.A_tilde.array() + shift;
  b.B = b.B_tilde.array() + shift;

  const CVector raw =
      state.norm * (state.plus_part.cwiseProduct(b.A) - state.minus_part.cwiseProduct(b.B));
  b.connection = state.coeffs.dot(raw);
  b.d_psi = raw - b.connection * state.coeffs;
  return b;
}

CMatrix theta(const EigenStateRecord& state, const DerivativeBundle& bundle,
              const LatticeSpec& spec) {
  if (state.coeffs.size() != spec.sites()) throw InvalidArgument("state does not fit the lattice");
  const CVector bracket =
      state.plus_part.cwiseProduct(bundle.A) - state.minus_part.cwiseProduct(bundle.B);
  const CVector psi_tilde = state.plus_part - state.minus_part;
  const double n2 = state.norm * state.norm;
  CMatrix out = n2 * bracket * psi_tilde.adjoint();
  out -= bundle.connection * state.coeffs * state.coeffs.adjoint();
  return out;
}

GaugePotentialMatrix full_cd(const LatticeSpec& spec, double lambda) {
  const std::vector<EigenStateRecord> basis = full_basis(spec, lambda);
  const int m = spec.sites();
  CMatrix d_psi(m, m), psi(m, m);
  for (int n = 0; n < m; ++n) {
    psi.col(n) = basis[n].coeffs;
    d_psi.col(n) = derivative_bundle(basis[n], spec, lambda).d_psi;
  }
  const CMatrix raw = cplx(0.0, 1.0) * (d_psi * psi.adjoint());

  GaugePotentialMatrix out;
  out.mode = CdMode::kFull;
  out.lambda = lambda;
  const double scale = raw.cwiseAbs().maxCoeff();
  Hermitized h = hermitize(raw);
  out.antihermitian_residual = scale > 0.0 ? h.residual / scale : 0.0;
  if (out.antihermitian_residual > kAssemblyTolerance) {
    throw DomainError("CD generator is not Hermitian (relative residual " +
                      std::to_string(out.antihermitian_residual) + "): incomplete basis");
  }
  CMatrix sym = h.matrix.matrix();
  out.diagonal_residual = scale > 0.0 ? sym.diagonal().cwiseAbs().maxCoeff() / scale : 0.0;
  if (out.diagonal_residual > kAssemblyTolerance) {
    throw DomainError("CD generator has a nonzero diagonal (relative " +
                      std::to_string(out.diagonal_residual) + ")");
  }
  sym.diagonal().setZero();
  out.matrix = HermitianMatrix(std::move(sym));
  return out;
}

GaugePotentialMatrix targeted_cd(const EigenStateRecord& state, const DerivativeBundle& bundle,
                                 const LatticeSpec& spec, double lambda) {
  const CMatrix th = theta(state, bundle, spec);
  CMatrix gen = cplx(0.0, 1.0) * (th - th.adjoint());
  GaugePotentialMatrix out;
  out.mode = CdMode::kTargeted;
  out.lambda = lambda;
  const double scale = gen.cwiseAbs().maxCoeff();
  out.diagonal_residual = scale > 0.0 ? gen.diagonal().cwiseAbs().maxCoeff() / scale : 0.0;
  if (out.diagonal_residual > kAssemblyTolerance) {
    throw DomainError("targeted CD generator has a nonzero diagonal");
  }
  gen.diagonal().setZero();
  out.matrix = HermitianMatrix(std::move(gen));
  return out;
}

GaugePotentialMatrix targeted_cd(const LatticeSpec& spec, double lambda) {
  const EigenStateRecord state = in_gap_state(spec, lambda);
  return targeted_cd(state, derivative_bundle(state, spec, lambda), spec, lambda);
}

HermitianMatrix cd_generator(const LatticeSpec& spec, double lambda, CdMode mode) {
  switch (mode) {
    case CdMode::kNone: return HermitianMatrix::zero(spec.sites());
    case CdMode::kFull: return full_cd(spec, lambda).matrix;
    case CdMode::kTargeted: return targeted_cd(spec, lambda).matrix;
  }
  throw InvalidArgument("unknown CD mode");
}

}  // namespace latticecd
