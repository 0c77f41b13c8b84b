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

// One-shot self check: analytic basis against dense diagonalization, CD
// structure, gap formula and certified propagation.

#include <string>
#include <vector>

namespace latticecd {

struct CertifyOptions {
  int sites = 11;  // odd, with x0 = -1
  double lambda0 = 0.9;
  double lambdaf = -0.9;
  double total_time = 1.0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double bound = 0.0;
  std::string detail;
};

std::vector<CheckResult> certify(const CertifyOptions& options);

}  // namespace latticecd
