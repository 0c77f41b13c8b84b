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

#include "latticecd/analytic_states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "latticecd/error.hpp"

namespace latticecd {
namespace {

constexpr double kPi = std::numbers::pi;

int mod(int x, int n) { return ((x % n) + n) % n; }

// Integer power through modulus and argument, which keeps unit-modulus
// powers on the circle for |n| in the hundreds.
cplx ipow(cplx alpha, int n) {
  return std::polar(std::pow(std::abs(alpha), n), n * std::arg(alpha));
}

// Second Bloch component of the SSH chain, before division by E * beta.
cplx ssh_bloch_numerator(cplx beta, double lambda) {
  return (1.0 + beta * beta) - lambda * (1.0 - beta * beta);
}

void check_band(int band) {
  if (band != 0 && band != 1) throw InvalidArgument("band label must be 0 or 1");
}

}  // namespace

cplx BlochPair::plus_at(int x) const {
  return phi_plus[mod(x, static_cast<int>(phi_plus.size()))];
}

cplx BlochPair::minus_at(int x) const {
  return phi_minus[mod(x, static_cast<int>(phi_minus.size()))];
}

double EigenStateRecord::quasimomentum() const {
  if (kind == StateKind::kInGap) return kPi / 2;
  return std::abs(std::arg(alpha));
}

std::vector<double> bulk_quasimomenta(const LatticeSpec& spec) {
  if (!spec.commensurate()) {
    throw UnsupportedPath(
        "chain is not commensurate (L - x0 not a multiple of the unit cell); "
        "bulk quasimomenta need the general quantization condition");
  }
  const int span = spec.L() - spec.x0();
  std::vector<double> k;
  k.reserve(span - 1);
  for (int n = 1; n < span; ++n) k.push_back(kPi * n / span);
  return k;
}

double ssh_energy(cplx alpha, double lambda, int band) {
  check_band(band);
  const double mod_alpha = std::abs(alpha);
  if (mod_alpha == 0.0 || !std::isfinite(mod_alpha)) {
    throw DomainError("ssh_energy needs a finite nonzero alpha");
  }
  double e = 0.0;
  if (std::abs(mod_alpha - 1.0) <= 1e-12) {
    // alpha = e^{ik}: ((1+a^2)/a)^2 = 4 cos^2 k, ((a^2-1)/a)^2 = -4 sin^2 k.
    const double k = std::arg(alpha);
    const double c = std::cos(k), s = std::sin(k);
    e = 2.0 * std::sqrt(c * c + lambda * lambda * s * s);
  } else {
    double radicand = 0.0, scale = 0.0;
    if (std::abs(alpha.real()) <= 1e-12 * mod_alpha) {
      // alpha = i a: both squares are real and negative.
      const double a2 = mod_alpha * mod_alpha;
      const double p = lambda * lambda * (1.0 + a2) * (1.0 + a2) / a2;
      const double q = (1.0 - a2) * (1.0 - a2) / a2;
      radicand = p - q;
      scale = std::max(p, q);
    } else {
      const cplx u = (1.0 + alpha * alpha) / alpha;
      const cplx v = (alpha * alpha - 1.0) / alpha;
      const cplx r = u * u - lambda * lambda * v * v;
      scale = std::max(std::norm(u), lambda * lambda * std::norm(v));
      if (std::abs(r.imag()) > 1e-12 * scale) {
        throw DomainError("alpha outside the supported families gives a complex energy");
      }
      radicand = r.real();
    }
    if (std::abs(radicand) <= 1e-12 * std::max(scale, 1.0)) {
      radicand = 0.0;
    } else if (radicand < 0.0) {
      throw DomainError("negative energy radicand: alpha is not an SSH eigenvalue parameter");
    }
    e = std::sqrt(radicand);
  }
  return band == 0 ? e : -e;
}

BlochPair ssh_bloch(cplx alpha, double lambda, int band) {
  const double e = ssh_energy(alpha, lambda, band);
  BlochPair out;
  if (e != 0.0) {
    const cplx inv = 1.0 / alpha;
    out.phi_plus = {1.0, ssh_bloch_numerator(alpha, lambda) / (e * alpha)};
    out.phi_minus = {1.0, ssh_bloch_numerator(inv, lambda) / (e * inv)};
    return out;
  }
  // E = 0: E^2 alpha^2 = P(alpha) Q(alpha) with Q(alpha) = alpha^2 P(1/alpha).
  // P = 0 sends phi_+ onto the even sublattice and phi_- onto the odd one;
  // Q = 0 is the mirror image.
  const double p = std::abs(ssh_bloch_numerator(alpha, lambda));
  const double q = std::abs(alpha * alpha * ssh_bloch_numerator(1.0 / alpha, lambda));
  constexpr double tol = 1e-8;
  if (p <= tol && q > tol) {
    out.phi_plus = {1.0, 0.0};
    out.phi_minus = {0.0, 1.0};
    out.plus_sublattice = 0;
    out.minus_sublattice = 1;
  } else if (q <= tol && p > tol) {
    out.phi_plus = {0.0, 1.0};
    out.phi_minus = {1.0, 0.0};
    out.plus_sublattice = 1;
    out.minus_sublattice = 0;
  } else {
    throw SingularError("zero energy at an alpha that is not an isolated edge root");
  }
  return out;
}

double ssh_lambda_of(const LatticeSpec& spec) {
  if (spec.tau() != 2) throw InvalidArgument("not an SSH chain: unit cell must have 2 sites");
  const int x = spec.first_site();
  const double t_first = spec.hopping_at(x).real();
  const double lambda = (x % 2 == 0) ? 1.0 - t_first : t_first - 1.0;
  if (!is_ssh(spec, lambda)) throw InvalidArgument("not an SSH chain");
  return lambda;
}

double edge_alpha_closed_form(double lambda) {
  const double l = std::abs(lambda);
  return std::sqrt((1.0 - l) / (1.0 + l));
}

double edge_residual(double a, double lambda) {
  // E^2 - t_weak P with E^2 = -P Q / a^2 and P = t_weak - t_strong a^2,
  // Q = t_strong - t_weak a^2; the difference collapses to -t_strong P / a^2.
  const double l = std::abs(lambda);
  const double t_weak = 1.0 - l, t_strong = 1.0 + l;
  return -t_strong * (t_weak - t_strong * a * a) / (a * a);
}

cplx edge_alpha(const LatticeSpec& spec, double lambda) {
  if (!is_ssh(spec, lambda)) throw InvalidArgument("edge_alpha needs the SSH chain at lambda");
  if (spec.sites() % 2 == 0) {
    throw DomainError("even site count: the SSH chain has no exact zero mode");
  }
  const double l = std::abs(lambda);
  if (l == 0.0 || l == 1.0) {
    throw SingularError("no isolated in-gap root at |lambda| = " + std::to_string(l));
  }
  if (l > 1.0) throw DomainError("|lambda| > 1: hoppings change sign, no gapped zero mode");

  double lo = 1e-9, hi = 1.0 - 1e-9;
  double f_lo = edge_residual(lo, lambda);
  const double f_hi = edge_residual(hi, lambda);
  if (!(f_lo < 0.0 && f_hi > 0.0)) {
    throw DomainError("edge residual does not change sign on (0, 1)");
  }
  for (int it = 0; it < 200 && hi - lo > 2.0 * std::numeric_limits<double>::epsilon() * hi;
       ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = edge_residual(mid, lambda);
    if (f == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f;
    } else {
      hi = mid;
    }
  }
  const double a = std::abs(edge_residual(lo, lambda)) <= std::abs(edge_residual(hi, lambda))
                       ? lo
                       : hi;
  if (std::abs(edge_residual(a, lambda)) >= 1e-12) {
    throw NotConverged("edge bisection stalled with residual " +
                       std::to_string(edge_residual(a, lambda)));
  }
  return {0.0, a};
}

EigenStateRecord assemble_state(const LatticeSpec& spec, const BlochPair& bloch, cplx alpha,
                                double energy) {
  const int m = spec.sites();
  EigenStateRecord rec;
  rec.alpha = alpha;
  rec.energy = energy;
  rec.band = energy < 0.0 ? 1 : 0;
  rec.bloch = bloch;
  rec.plus_part = CVector::Zero(m);
  rec.minus_part = CVector::Zero(m);

  if (bloch.polarized()) {
    if (spec.tau() != 2) throw InvalidArgument("polarized Bloch functions need a 2-site cell");
    const int edge_parity = mod(spec.first_site(), 2);
    if (mod(spec.last_site(), 2) != edge_parity) {
      throw DomainError("zero mode needs both ends on the same sublattice (odd site count)");
    }
    const cplx step = alpha * alpha;
    if (*bloch.plus_sublattice == edge_parity) {
      // phi_+ alpha^x term, measured from the left edge.
      const int xs = spec.first_site();
      cplx v = 1.0;
      for (int x = xs; x <= spec.last_site(); x += 2, v *= step) rec.plus_part(spec.index_of(x)) = v;
      rec.reference_site = xs;
    } else if (*bloch.minus_sublattice == edge_parity) {
      // phi_- alpha^(2L - x) term, measured from the right edge.
      const int xs = spec.last_site();
      cplx v = 1.0;
      for (int x = xs; x >= spec.first_site(); x -= 2, v *= step)
        rec.minus_part(spec.index_of(x)) = -v;
      rec.reference_site = xs;
    } else {
      throw DomainError("polarized Bloch functions miss the edge sublattice");
    }
    rec.kind = StateKind::kInGap;
  } else {
    const int L = spec.L(), x0 = spec.x0();
    const cplx phi_minus_L = bloch.minus_at(L);
    if (std::abs(phi_minus_L) == 0.0) throw SingularError("phi_-(L) vanishes");
    const cplx ratio = bloch.plus_at(L) / phi_minus_L;
    auto plus_term = [&](int x) { return bloch.plus_at(x) * ipow(alpha, x); };
    auto minus_term = [&](int x) { return ratio * bloch.minus_at(x) * ipow(alpha, 2 * L - x); };
    for (int i = 0; i < m; ++i) {
      const int x = spec.site_of(i);
      rec.plus_part(i) = plus_term(x);
      rec.minus_part(i) = minus_term(x);
    }
    const double nrm = (rec.plus_part - rec.minus_part).norm();
    if (nrm == 0.0 || !std::isfinite(nrm)) throw SingularError("state vanishes identically");
    rec.boundary_residual = std::max(std::abs(plus_term(x0) - minus_term(x0)),
                                     std::abs(plus_term(L) - minus_term(L))) /
                            nrm;
    rec.kind = std::abs(std::abs(alpha) - 1.0) <= 1e-12 ? StateKind::kBulk : StateKind::kInGap;
  }
  const double nrm = (rec.plus_part - rec.minus_part).norm();
  if (nrm == 0.0 || !std::isfinite(nrm)) throw SingularError("state vanishes identically");
  rec.norm = 1.0 / nrm;
  rec.coeffs = rec.norm * (rec.plus_part - rec.minus_part);
  return rec;
}

cplx quantization_residual(const LatticeSpec& spec, const BlochPair& bloch, cplx alpha) {
  if (bloch.polarized()) {
    throw SingularError("polarized Bloch functions: phi(L) or phi(x0) vanishes");
  }
  const int L = spec.L(), x0 = spec.x0();
  const cplx den = bloch.plus_at(L) * bloch.minus_at(x0);
  if (std::abs(den) == 0.0) throw SingularError("vanishing Bloch component in quantization");
  return ipow(alpha, 2 * (L - x0)) - bloch.plus_at(x0) * bloch.minus_at(L) / den;
}

cplx quantization_residual(const LatticeSpec& spec, cplx alpha) {
  const double lambda = ssh_lambda_of(spec);
  return quantization_residual(spec, ssh_bloch(alpha, lambda, 0), alpha);
}

EigenStateRecord in_gap_state(const LatticeSpec& spec, double lambda) {
  const cplx alpha = edge_alpha(spec, lambda);
  const double e = ssh_energy(alpha, lambda, 0);
  return assemble_state(spec, ssh_bloch(alpha, lambda, 0), alpha, e);
}

std::vector<EigenStateRecord> full_basis(const LatticeSpec& spec, double lambda) {
  if (!is_ssh(spec, lambda)) throw InvalidArgument("full_basis needs the SSH chain at lambda");
  const std::vector<double> ks = bulk_quasimomenta(spec);
  const int span = spec.L() - spec.x0();

  std::vector<EigenStateRecord> basis;
  basis.reserve(spec.sites());
  basis.push_back(in_gap_state(spec, lambda));
  // n < span / 2 keeps k in (0, pi/2); both bands cover the rest.
  for (int n = 1; 2 * n < span; ++n) {
    const cplx alpha = std::polar(1.0, ks[n - 1]);
    for (int band : {0, 1}) {
      const double e = ssh_energy(alpha, lambda, band);
      basis.push_back(assemble_state(spec, ssh_bloch(alpha, lambda, band), alpha, e));
    }
  }
  if (static_cast<int>(basis.size()) != spec.sites()) {
    throw DomainError("analytic basis has " + std::to_string(basis.size()) + " states for " +
                      std::to_string(spec.sites()) + " sites");
  }
  std::stable_sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.quasimomentum() < b.quasimomentum();
  });
  return basis;
}

CVector sublattice_zero_mode(const LatticeSpec& spec) {
  const int m = spec.sites();
  if (m % 2 == 0) throw DomainError("even site count has no sublattice zero mode");
  if (std::any_of(spec.potential().begin(), spec.potential().end(),
                  [](double mu) { return mu != 0.0; })) {
    throw InvalidArgument("sublattice zero mode needs a chain without on-site potential");
  }
  CVector psi = CVector::Zero(m);
  psi(0) = 1.0;
  for (int i = 1; i + 1 < m; i += 2) {
    const cplx t_prev = spec.hopping()[i - 1];
    const cplx t_next = spec.hopping()[i];
    if (std::abs(t_next) == 0.0) throw SingularError("vanishing hopping breaks the recursion");
    psi(i + 1) = -std::conj(t_prev) * psi(i - 1) / t_next;
    if (std::abs(psi(i + 1)) > 1e200) psi *= 1e-200;
  }
  psi.normalize();
  Eigen::Index imax = 0;
  psi.cwiseAbs().maxCoeff(&imax);
  psi *= std::conj(psi(imax)) / std::abs(psi(imax));
  return psi;
}

}  // namespace latticecd
