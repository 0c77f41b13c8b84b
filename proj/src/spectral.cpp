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

#include "latticecd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "latticecd/cd_engine.hpp"
#include "latticecd/dynamics.hpp"
#include "latticecd/error.hpp"

namespace latticecd {

EigenDecomposition eigh(const HermitianMatrix& m) {
  const double scale = m.max_abs();
  const double defect = m.hermiticity_defect();
  if (defect > 1e-10 * scale) {
    throw InvalidArgument("eigh: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  if (m.dim() == 0) return {};
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) throw NotConverged("eigh: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double gap_to_zero_mode(const std::vector<double>& e) {
  if (e.size() < 2) throw InvalidArgument("gap_to_zero_mode needs at least two eigenvalues");
  std::size_t edge = 0;
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (std::abs(e[i]) < std::abs(e[edge])) edge = i;
  }
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i != edge) gap = std::min(gap, std::abs(e[i] - e[edge]));
  }
  return gap;
}

double gap_to_zero_mode(const RVector& e) {
  return gap_to_zero_mode(std::vector<double>(e.data(), e.data() + e.size()));
}

double ssh_gap_formula(double lambda, int L) {
  const double l2 = lambda * lambda;
  const double c = std::cos(static_cast<double>(L - 1) * std::numbers::pi / (L + 1));
  return std::sqrt(2.0) * std::sqrt(std::max(0.0, 1.0 + l2 + (1.0 - l2) * c));
}

double frobenius_norm(const HermitianMatrix& m) { return m.matrix().norm(); }

double diagonal_norm_ratio(const HermitianMatrix& m, int d) {
  const HermitianMatrix banded = band_limit(m, d);
  const double total = frobenius_norm(m);
  if (total == 0.0) return 1.0;
  return std::min(1.0, frobenius_norm(banded) / total);
}

const char* to_string(SpectrumMode mode) noexcept {
  switch (mode) {
    case SpectrumMode::kBare: return "bare";
    case SpectrumMode::kFullCd: return "full-cd";
    case SpectrumMode::kTargetedCd: return "targeted-cd";
  }
  return "unknown";
}

SpectrumTable spectrum_sweep(int L, int x0, const std::vector<double>& grid, SpectrumMode mode,
                             double lambda_dot) {
  SpectrumTable table;
  table.mode = mode;
  table.sites = L - x0 - 1;
  table.lambda_dot = mode == SpectrumMode::kBare ? 0.0 : lambda_dot;
  table.rows.reserve(grid.size());
  for (double lambda : grid) {
    SpectrumRow row;
    row.lambda = lambda;
    const LatticeSpec spec = ssh_spec(L, x0, lambda);
    CMatrix h = build_hamiltonian(spec).matrix();
    try {
      if (mode == SpectrumMode::kFullCd) {
        h += lambda_dot * full_cd(spec, lambda).matrix.matrix();
      } else if (mode == SpectrumMode::kTargetedCd) {
        h += lambda_dot * targeted_cd(spec, lambda).matrix.matrix();
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingular && e.code() != ErrorCode::kDomain) throw;
      row.skipped = true;
      row.reason = e.what();
      table.rows.push_back(std::move(row));
      continue;
    }
    const EigenDecomposition eig = eigh(HermitianMatrix(std::move(h)));
    row.energies.assign(eig.values.data(), eig.values.data() + eig.values.size());
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace latticecd
