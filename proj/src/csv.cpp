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

#include "latticecd/csv.hpp"

#include <cmath>
#include <charconv>

namespace latticecd {
namespace {

void put_manifest(std::ostream& os, const std::string& manifest) {
  if (manifest.empty()) return;
  if (manifest[0] != '#') os << "# ";
  os << manifest;
  if (manifest.back() != '\n') os << '\n';
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void write_state_csv(std::ostream& os, const std::string& manifest, const LatticeSpec& spec,
                     double lambda, const EigenStateRecord& state) {
  put_manifest(os, manifest);
  os << "# lambda=" << format_double(lambda) << " alpha_modulus=" << format_double(std::abs(state.alpha))
     << " alpha_phase=" << format_double(std::arg(state.alpha))
     << " energy=" << format_double(state.energy) << '\n';
  os << "x,re_psi,im_psi,prob\n";
  for (int i = 0; i < spec.sites(); ++i) {
    const cplx c = state.coeffs(i);
    os << spec.site_of(i) << ',' << format_double(c.real()) << ',' << format_double(c.imag()) << ','
       << format_double(std::norm(c)) << '\n';
  }
}

void write_cd_csv(std::ostream& os, const std::string& manifest, const LatticeSpec& spec,
                  const GaugePotentialMatrix& cd) {
  put_manifest(os, manifest);
  const int m = cd.matrix.dim();
  os << "# lambda=" << format_double(cd.lambda) << " mode=" << to_string(cd.mode) << " M=" << m
     << '\n';
  os << "x,x_prime,re,im,abs\n";
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const cplx c = cd.matrix(i, j);
      os << spec.site_of(i) << ',' << spec.site_of(j) << ',' << format_double(c.real()) << ','
         << format_double(c.imag()) << ',' << format_double(std::abs(c)) << '\n';
    }
  }
}

}  // namespace latticecd
