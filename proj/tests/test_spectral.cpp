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
#include <cstdint>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "latticecd/certify.hpp"
#include "latticecd/csv.hpp"
#include "latticecd/error.hpp"
#include "latticecd/spectral.hpp"

using namespace latticecd;
using std::numbers::pi;

TEST_CASE("eigh: small cases") {
  const EigenDecomposition e = eigh(build_hamiltonian(ssh_spec(3, -1, 0.0)));
  CHECK(e.values(0) == doctest::Approx(-std::sqrt(2.0)));
  CHECK(std::abs(e.values(1)) < 1e-15);
  CHECK(e.values(2) == doctest::Approx(std::sqrt(2.0)));
  const EigenDecomposition id = eigh(HermitianMatrix(CMatrix::Identity(4, 4)));
  for (int i = 0; i < 4; ++i) CHECK(id.values(i) == doctest::Approx(1.0));
  CMatrix bad(2, 2);
  bad << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(eigh(HermitianMatrix(bad)), InvalidArgument);
}

TEST_CASE("eigh: seeded random Hermitian matrices up to 401") {
  std::mt19937_64 rng(20261016);
  std::normal_distribution<double> g;
  for (int n : {1, 2, 17, 100, 401}) {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = cplx(g(rng), g(rng));
    const HermitianMatrix m = hermitize(a).matrix;
    const EigenDecomposition e = eigh(m);
    const double scale = m.matrix().norm();
    for (int k = 0; k < n; ++k) {
      CHECK((m.matrix() * e.vectors.col(k) - e.values(k) * e.vectors.col(k)).norm() <= 1e-10 * scale);
      if (k > 0) CHECK(e.values(k) >= e.values(k - 1));
    }
    CHECK((e.vectors.adjoint() * e.vectors - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("uniform chain spectrum at lambda = 0") {
  const EigenDecomposition e = eigh(build_hamiltonian(ssh_spec(11, -1, 0.0)));
  for (int n = 1; n <= 11; ++n) {
    CHECK(e.values(11 - n) == doctest::Approx(2.0 * std::cos(pi * n / 12)).epsilon(1e-12));
  }
}

TEST_CASE("gap formula") {
  CHECK(ssh_gap_formula(0.0, 11) == doctest::Approx(0.5176380902050415).epsilon(1e-13));
  CHECK(ssh_gap_formula(0.0, 101) == doctest::Approx(0.06159011711234028).epsilon(1e-13));
  CHECK(ssh_gap_formula(0.3, 100001) == doctest::Approx(0.6).epsilon(1e-6));
  for (int L : {11, 51, 101}) {
    for (double l : {0.0, 1e-3, -1e-3, 0.1, -0.1}) {
      const EigenDecomposition e = eigh(build_hamiltonian(ssh_spec(L, -1, l)));
      CHECK(std::abs(gap_to_zero_mode(e.values) - ssh_gap_formula(l, L)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(gap_to_zero_mode(std::vector<double>{1.0}), InvalidArgument);
  CHECK(gap_to_zero_mode(std::vector<double>{-3.0, 0.1, 0.5}) == doctest::Approx(0.4));
}

TEST_CASE("norm diagnostics") {
  CHECK(frobenius_norm(HermitianMatrix::zero(5)) == 0.0);
  CHECK(diagonal_norm_ratio(HermitianMatrix::zero(5), 2) == 1.0);
  const HermitianMatrix m = full_cd(ssh_spec(21, -1, 0.2), 0.2).matrix;
  double prev = 0.0;
  for (int d = 0; d < 21; ++d) {
    const double r = diagonal_norm_ratio(m, d);
    CHECK(r >= prev);
    CHECK(r <= 1.0);
    prev = r;
  }
  CHECK(diagonal_norm_ratio(m, 20) == 1.0);
  CHECK(diagonal_norm_ratio(m, 0) == 0.0);
}

TEST_CASE("spectrum sweep") {
  const std::vector<double> grid = {-0.5, 0.0, 0.5};
  const SpectrumTable bare = spectrum_sweep(11, -1, grid, SpectrumMode::kBare);
  REQUIRE(bare.rows.size() == 3);
  for (const auto& row : bare.rows) {
    REQUIRE(row.energies.size() == 11);
    for (int i = 0; i < 11; ++i) CHECK(std::abs(row.energies[i] + row.energies[10 - i]) < 1e-10);
  }
  const SpectrumTable t = spectrum_sweep(11, -1, grid, SpectrumMode::kTargetedCd);
  CHECK(t.rows[1].skipped);
  CHECK_FALSE(t.rows[1].reason.empty());
  CHECK_FALSE(t.rows[0].skipped);
  CHECK(t.lambda_dot == -1.8);
}

TEST_CASE("csv dumps") {
  const LatticeSpec spec = ssh_spec(5, -1, 0.5);
  std::ostringstream os;
  write_state_csv(os, "# latticecd test", spec, 0.5, in_gap_state(spec, 0.5));
  const std::string s = os.str();
  CHECK(s.rfind("# latticecd test\n# lambda=0.5 alpha_modulus=", 0) == 0);
  CHECK(s.find("\nx,re_psi,im_psi,prob\n0,") != std::string::npos);
  std::ostringstream cd;
  write_cd_csv(cd, "", spec, full_cd(spec, 0.5));
  CHECK(cd.str().rfind("# lambda=0.5 mode=full M=5\nx,x_prime,re,im,abs\n0,0,0,0,0\n", 0) == 0);
  CHECK(format_double(0.1) == "0.1");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_double(-0.0) == "0");
}

TEST_CASE("certify passes on the default protocol") {
  const auto checks = certify({});
  CHECK(checks.size() >= 10);
  for (const auto& c : checks) {
    INFO(c.name << " " << c.value << " " << c.detail);
    CHECK(c.passed);
  }
  CHECK_THROWS_AS(certify({10, 0.9, -0.9, 1.0}), InvalidArgument);
}
