// Copyright 2026 The dagstack Authors
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

#ifndef DAGSTACK_ERROR_H_
#define DAGSTACK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dagstack {

enum class ErrorCode {
  kInvariantViolation,
  kParseError,
  kIoError,
  kCyclicGraph,
  kDisconnected,
  kNotOuterplanar,
  kNotTwoTree,
  kNotTwoTreeBlock,
  kNotMaximalOuterplanar,
  kEdgeMissing,
  kWrongOrientation,
  kCyclicStackingFound,
  kBadOrdering,
  kNotTopological,
  kTooLarge,
  kNonPositive,
  kMixedDirections,
  kNotAPartition,
  kCapExceeded,
  kNotMonotoneVertex,
  kNotMonotone,
  kMissingBlockLayout,
  kCertificateInsufficient,
  kSpanConflict,
  kPremiseViolated,
  kSizeExceeded,
  kPreconditionViolated,
  kBudgetExceeded,
  kDuplicateValues,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// All failures raised by the library carry one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dagstack

#endif  // DAGSTACK_ERROR_H_
