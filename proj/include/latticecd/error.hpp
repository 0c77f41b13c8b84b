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

#include <stdexcept>
#include <string>

namespace latticecd {

enum class ErrorCode {
  kInvalidArgument = 1,
  kSingular = 2,
  kDomain = 3,
  kUnsupported = 4,
  kNotConverged = 5,
  kIo = 6,
};

/// Base of every exception thrown by the library. The code survives the trip
/// through the C API as an lcd_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w) : Error(ErrorCode::kInvalidArgument, w) {}
};
// Division by a vanishing quantity (zero energy, zero Bloch component,
// lambda at 0 or +-1 where a closed form breaks down).
struct SingularError : Error {
  explicit SingularError(const std::string& w) : Error(ErrorCode::kSingular, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorCode::kDomain, w) {}
};
struct UnsupportedPath : Error {
  explicit UnsupportedPath(const std::string& w) : Error(ErrorCode::kUnsupported, w) {}
};
struct NotConverged : Error {
  explicit NotConverged(const std::string& w) : Error(ErrorCode::kNotConverged, w) {}
};
struct IoError : Error {
  explicit IoError(const std::string& w) : Error(ErrorCode::kIo, w) {}
};

}  // namespace latticecd
