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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "latticecd.h"

TEST_CASE("version and status strings") {
  CHECK(std::string(lcd_version()) == "1.0.0");
  CHECK(std::string(lcd_status_string(LCD_ERR_SINGULAR)) == "singular");
}

TEST_CASE("lattice, hamiltonian, eigh, gap") {
  lcd_lattice* lat = nullptr;
  REQUIRE(lcd_lattice_ssh(11, -1, 0.0, &lat) == LCD_OK);
  CHECK(lcd_lattice_sites(lat) == 11);
  CHECK(lcd_lattice_site_of(lat, 3) == 3);
  lcd_matrix* h = nullptr;
  REQUIRE(lcd_hamiltonian(lat, &h) == LCD_OK);
  std::vector<double> e(11);
  std::vector<lcd_complex> v(121);
  REQUIRE(lcd_eigh(h, e.data(), v.data()) == LCD_OK);
  double g = 0.0;
  REQUIRE(lcd_gap_to_zero_mode(e.data(), e.size(), &g) == LCD_OK);
  CHECK(g == doctest::Approx(0.5176380902050415).epsilon(1e-12));
  CHECK(lcd_ssh_gap_formula(0.0, 11) == doctest::Approx(g).epsilon(1e-12));
  lcd_matrix_free(h);
  lcd_lattice_free(lat);
}

TEST_CASE("errors carry status and message") {
  lcd_lattice* lat = nullptr;
  CHECK(lcd_lattice_ssh(0, -1, 0.5, &lat) == LCD_ERR_INVALID_ARGUMENT);
  CHECK(std::string(lcd_last_error()).find("2 sites") != std::string::npos);
  REQUIRE(lcd_lattice_ssh(11, -1, 0.0, &lat) == LCD_OK);
  lcd_complex a{};
  CHECK(lcd_edge_alpha(lat, 0.0, &a) == LCD_ERR_SINGULAR);
  lcd_state* s = nullptr;
  CHECK(lcd_in_gap_state(lat, 0.0, &s) == LCD_ERR_SINGULAR);
  CHECK(s == nullptr);
  CHECK(lcd_hamiltonian(nullptr, nullptr) == LCD_ERR_INVALID_ARGUMENT);
  lcd_lattice_free(lat);
  lcd_lattice_free(nullptr);
}

TEST_CASE("general lattice and hermitize") {
  const lcd_complex hop[2] = {{1.0, 0.0}, {0.0, 1.0}};
  const double pot[3] = {0.0, 0.5, 0.0};
  lcd_lattice* lat = nullptr;
  REQUIRE(lcd_lattice_create(-1, 3, hop, 2, pot, 3, 1, &lat) == LCD_OK);
  lcd_matrix* h = nullptr;
  REQUIRE(lcd_hamiltonian(lat, &h) == LCD_OK);
  lcd_complex m[9];
  REQUIRE(lcd_matrix_entries(h, m, 9) == LCD_OK);
  CHECK(m[5].im == 1.0);   // (1, 2)
  CHECK(m[7].im == -1.0);  // (2, 1)
  CHECK(m[4].re == 0.5);
  const lcd_complex raw[4] = {{0, 0}, {0, 1}, {0, 0}, {0, 0}};
  lcd_matrix* sym = nullptr;
  double residual = 0.0;
  REQUIRE(lcd_matrix_hermitize(2, raw, &sym, &residual) == LCD_OK);
  CHECK(residual == doctest::Approx(1.0));
  lcd_matrix_free(sym);
  lcd_matrix_free(h);
  lcd_lattice_free(lat);
}

TEST_CASE("states and CD generators") {
  lcd_lattice* lat = nullptr;
  REQUIRE(lcd_lattice_ssh(11, -1, 0.5, &lat) == LCD_OK);
  lcd_complex a{};
  REQUIRE(lcd_edge_alpha(lat, 0.5, &a) == LCD_OK);
  CHECK(a.im == doctest::Approx(lcd_edge_alpha_closed_form(0.5)).epsilon(1e-12));

  lcd_basis* basis = nullptr;
  REQUIRE(lcd_full_basis(lat, 0.5, &basis) == LCD_OK);
  CHECK(lcd_basis_size(basis) == 11);
  lcd_state* mid = nullptr;
  REQUIRE(lcd_basis_state(basis, 5, &mid) == LCD_OK);
  lcd_state_info info{};
  REQUIRE(lcd_state_get_info(mid, &info) == LCD_OK);
  CHECK(info.in_gap == 1);
  CHECK(info.energy == 0.0);
  CHECK(lcd_basis_state(basis, 11, &mid) == LCD_ERR_INVALID_ARGUMENT);

  std::vector<lcd_complex> c(11), z(11);
  REQUIRE(lcd_state_coeffs(mid, c.data(), c.size()) == LCD_OK);
  REQUIRE(lcd_zero_mode(lat, z.data(), z.size()) == LCD_OK);
  double overlap_re = 0.0, overlap_im = 0.0;
  for (int i = 0; i < 11; ++i) {
    overlap_re += c[i].re * z[i].re + c[i].im * z[i].im;
    overlap_im += c[i].re * z[i].im - c[i].im * z[i].re;
  }
  CHECK(overlap_re * overlap_re + overlap_im * overlap_im == doctest::Approx(1.0).epsilon(1e-12));

  lcd_matrix* full = nullptr;
  double ah = -1.0, diag = -1.0;
  REQUIRE(lcd_cd_generator(lat, 0.5, LCD_CD_FULL, &full, &ah, &diag) == LCD_OK);
  CHECK(ah < 1e-10);
  CHECK(diag < 1e-10);
  double ratio = 0.0;
  REQUIRE(lcd_matrix_diagonal_ratio(full, 10, &ratio) == LCD_OK);
  CHECK(ratio == 1.0);
  CHECK(lcd_matrix_diagonal_ratio(full, 11, &ratio) == LCD_ERR_INVALID_ARGUMENT);
  lcd_matrix* banded = nullptr;
  REQUIRE(lcd_matrix_band_limit(full, 0, &banded) == LCD_OK);
  CHECK(lcd_matrix_frobenius(banded) == 0.0);
  CHECK(lcd_matrix_frobenius(full) > 0.0);

  const std::string path = "c_api_state.csv";
  REQUIRE(lcd_state_write_csv(mid, lat, 0.5, "# test manifest", path.c_str()) == LCD_OK);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().rfind("# test manifest\n# lambda=0.5", 0) == 0);
  std::remove(path.c_str());
  CHECK(lcd_state_write_csv(mid, lat, 0.5, nullptr, "/nonexistent/dir/x.csv") == LCD_ERR_IO);

  lcd_matrix_free(banded);
  lcd_matrix_free(full);
  lcd_state_free(mid);
  lcd_basis_free(basis);
  lcd_lattice_free(lat);
}

namespace {
void count_points(const lcd_trace_point*, void* user) { ++*static_cast<int*>(user); }
}  // namespace

TEST_CASE("propagation, sweeps, spectra, certify") {
  lcd_protocol p{0.9, -0.9, 1.0, LCD_CD_TARGETED, -1};
  lcd_evolution r{};
  int points = 0;
  std::vector<lcd_complex> psi(11);
  REQUIRE(lcd_propagate(11, -1, &p, 0.01, count_points, &points, &r, psi.data()) == LCD_OK);
  CHECK(points == 101);
  CHECK(r.fidelity > 1.0 - 1e-6);
  p.cd_mode = LCD_CD_NONE;
  p.band_limit = 2;
  CHECK(lcd_propagate(11, -1, &p, 0.01, nullptr, nullptr, &r, nullptr) == LCD_ERR_INVALID_ARGUMENT);

  p.band_limit = -1;
  lcd_sweep* sweep = nullptr;
  REQUIRE(lcd_convergence_sweep(11, -1, &p, 1e-2, &sweep) == LCD_OK);
  CHECK(lcd_sweep_converged(sweep) == 1);
  lcd_sweep_point pt{};
  REQUIRE(lcd_sweep_point_at(sweep, lcd_sweep_size(sweep) - 1, &pt) == LCD_OK);
  CHECK(pt.fidelity == doctest::Approx(1.427e-10).epsilon(0.01));
  lcd_sweep_free(sweep);

  const double grid[3] = {-0.5, 0.0, 0.5};
  lcd_spectrum* spec = nullptr;
  REQUIRE(lcd_spectrum_sweep(11, -1, grid, 3, LCD_SPECTRUM_FULL_CD, -1.8, &spec) == LCD_OK);
  CHECK(lcd_spectrum_rows(spec) == 3);
  CHECK(lcd_spectrum_sites(spec) == 11);
  int skipped = 0;
  const char* reason = nullptr;
  std::vector<double> e(11);
  REQUIRE(lcd_spectrum_row(spec, 1, nullptr, &skipped, e.data(), &reason) == LCD_OK);
  CHECK(skipped == 1);
  REQUIRE(lcd_spectrum_row(spec, 2, nullptr, &skipped, e.data(), nullptr) == LCD_OK);
  CHECK(skipped == 0);
  lcd_spectrum_free(spec);

  lcd_report* report = nullptr;
  REQUIRE(lcd_certify(7, 0.9, -0.9, 1.0, &report) == LCD_OK);
  for (size_t i = 0; i < lcd_report_size(report); ++i) {
    lcd_check c{};
    REQUIRE(lcd_report_check(report, i, &c) == LCD_OK);
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed == 1);
  }
  lcd_report_free(report);
}
