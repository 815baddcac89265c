// Copyright 2026 The cld Authors
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

#ifndef CLD_ERROR_HPP_
#define CLD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cld {

enum class ErrorCode {
  kNotASimplex,
  kDimensionMismatch,
  kDegenerateBase,
  kHorizonTooSmall,
  kSolverDiverged,
  kNoConvergence,
  kStateSpaceTooLarge,
  kInvalidAdversaryMove,
  kIncompleteTrace,
  kEmptySequence,
  kConfigError,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception type; callers
// that need to branch on the failure inspect code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require_same_size(std::size_t a, std::size_t b,
                              std::string_view what) {
  if (a != b) {
    fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": " + std::to_string(a) + " vs " +
             std::to_string(b));
  }
}

}  // namespace cld

#endif  // CLD_ERROR_HPP_
