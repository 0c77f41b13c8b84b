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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "latticecd/cd_engine.hpp"
#include "latticecd/transfer_matrix.hpp"

using namespace latticecd;

TEST_CASE("transfer matrix reproduces the SSH dispersion and Bloch functions") {
  const double lambda = 0.35;
  const LatticeSpec spec = ssh_spec(21, -1, lambda);
  for (double k : {0.4, 1.2, 2.7}) {
    const cplx a = std::polar(1.0, k);
    for (int band : {0, 1}) {
      const double e = ssh_energy(a, lambda, band);
      CHECK(std::abs(dispersion_residual(spec, a, e)) < 1e-12);
      CHECK(refine_energy(spec, a, e + 0.01) == doctest::Approx(e).epsilon(1e-12));
      const BlochPair tm = transfer_matrix_bloch(spec, a, e);
      const BlochPair cf = ssh_bloch(a, lambda, band);
      CHECK(std::abs(tm.phi_plus[1] - cf.phi_plus[1]) < 1e-12);
      CHECK(std::abs(tm.phi_minus[1] - cf.phi_minus[1]) < 1e-12);
    }
  }
  CHECK(std::abs(dispersion_residual(spec, std::polar(1.0, 0.4), 0.3)) > 1e-3);
}

TEST_CASE("Richardson derivative of Bloch data matches the closed form") {
  const SpecBuilder builder = [](double l) { return ssh_spec(21, -1, l); };
  for (double lambda : {-0.6, 0.2, 0.75}) {
    const cplx a = std::polar(1.0, 1.0);
    const double e = ssh_energy(a, lambda, 0);
    const BlochDerivative fd = bloch_derivative_fd(builder, lambda, a, e);
    const auto [dp, dm] = ssh_dbloch(a, lambda, 0.0, e);
    CHECK(std::abs(fd.d_phi_plus[1] - dp[1]) < 1e-8);
    CHECK(std::abs(fd.d_phi_minus[1] - dm[1]) < 1e-8);
    // dE/dlambda = 2 lambda sin^2 k / (E/2) * ... from E^2 = 4 (cos^2 k + lambda^2 sin^2 k).
    const double de = 4.0 * lambda * std::sin(1.0) * std::sin(1.0) / e;
    CHECK(fd.d_energy == doctest::Approx(de).epsilon(1e-8));
  }
}
