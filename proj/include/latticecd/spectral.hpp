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

// Dense Hermitian eigensolving, gaps and CD-matrix norm diagnostics.

#include <string>
#include <vector>

#include "latticecd/lattice.hpp"

namespace latticecd {

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // orthonormal columns
};

/// Throws InvalidArgument if the Hermiticity defect exceeds 1e-10 max|m|.
EigenDecomposition eigh(const HermitianMatrix& m);

/// Distance from the eigenvalue of minimal modulus to its nearest other
/// eigenvalue. Throws InvalidArgument for fewer than two values.
double gap_to_zero_mode(const std::vector<double>& eigenvalues);
double gap_to_zero_mode(const RVector& eigenvalues);

/// sqrt(2) sqrt(1 + lambda^2 + (1 - lambda^2) cos((L - 1) pi / (L + 1)))
/// for the SSH chain with x0 = -1.
double ssh_gap_formula(double lambda, int L);

double frobenius_norm(const HermitianMatrix& m);

/// ||band_limit(m, d)|| / ||m||; 1 for the zero matrix.
double diagonal_norm_ratio(const HermitianMatrix& m, int d);

enum class SpectrumMode { kBare, kFullCd, kTargetedCd };

const char* to_string(SpectrumMode mode) noexcept;

struct SpectrumRow {
  double lambda = 0.0;
  bool skipped = false;
  std::string reason;          // set when skipped
  std::vector<double> energies;  // ascending, empty when skipped
};

struct SpectrumTable {
  SpectrumMode mode = SpectrumMode::kBare;
  int sites = 0;
  double lambda_dot = 0.0;
  std::vector<SpectrumRow> rows;  // grid order
};

/// Spectra of H(lambda) + lambda_dot * A(lambda) on the SSH chain. Grid
/// points where the generator is singular are kept as skipped rows.
SpectrumTable spectrum_sweep(int L, int x0, const std::vector<double>& grid, SpectrumMode mode,
                             double lambda_dot = -1.8);

}  // namespace latticecd
