// Copyright 2026 The rykick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RYKICK_ERROR_HPP
#define RYKICK_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rykick {

enum class ErrorCode {
  kValidation,
  kUnstableTrap,
  kLinearInstability,
  kNoConvergence,
  kInsufficientSlices,
  kInsufficientTerms,
  kEmptyNullSpace,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for every module; `code()` tells callers which
/// failure occurred so the CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kValidation: return "Validation";
    case ErrorCode::kUnstableTrap: return "UnstableTrap";
    case ErrorCode::kLinearInstability: return "LinearInstability";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kInsufficientSlices: return "InsufficientSlices";
    case ErrorCode::kInsufficientTerms: return "InsufficientTerms";
    case ErrorCode::kEmptyNullSpace: return "EmptyNullSpace";
  }
  return "Unknown";
}

}  // namespace rykick

#endif  // RYKICK_ERROR_HPP
