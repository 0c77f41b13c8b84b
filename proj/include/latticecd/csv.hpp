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

// CSV dumps of states and CD matrices. Numbers are written in the shortest form
// that reads back to the same double.

#include <ostream>
#include <string>

#include "latticecd/cd_engine.hpp"

namespace latticecd {

std::string format_double(double v);

/// manifest (a '#'-prefixed line, written verbatim), then
/// "# lambda=.. alpha_modulus=.. alpha_phase=.. energy=..", then
/// x,re_psi,im_psi,prob with x the site label.
void write_state_csv(std::ostream& os, const std::string& manifest, const LatticeSpec& spec,
                     double lambda, const EigenStateRecord& state);

/// manifest, "# lambda=.. mode=.. M=..", then x,x_prime,re,im,abs for every
/// entry.
void write_cd_csv(std::ostream& os, const std::string& manifest, const LatticeSpec& spec,
                  const GaugePotentialMatrix& cd);

}  // namespace latticecd
