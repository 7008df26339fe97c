// Copyright 2026 The oneshot Authors. All rights reserved.
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

#ifndef ONESHOT_ERRORS_HPP_
#define ONESHOT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace oneshot {

// Error taxonomy. The CLI maps these onto process exit codes:
// validation failures -> 3, budget exhaustion -> 4, everything else -> 2.
enum class ErrorKind {
  kNegativeMass,
  kNotNormalized,
  kDuplicateLabel,
  kLabelMismatch,
  kZeroConditioningEvent,
  kInvalidEpsilonBudget,
  kInvalidParameter,
  kUnknownSymbol,
  kOutputTooLong,
  kEmptyCode,
  kBudgetExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::kNegativeMass: return "NegativeMass";
    case ErrorKind::kNotNormalized: return "NotNormalized";
    case ErrorKind::kDuplicateLabel: return "DuplicateLabel";
    case ErrorKind::kLabelMismatch: return "LabelMismatch";
    case ErrorKind::kZeroConditioningEvent: return "ZeroConditioningEvent";
    case ErrorKind::kInvalidEpsilonBudget: return "InvalidEpsilonBudget";
    case ErrorKind::kInvalidParameter: return "InvalidParameter";
    case ErrorKind::kUnknownSymbol: return "UnknownSymbol";
    case ErrorKind::kOutputTooLong: return "OutputTooLong";
    case ErrorKind::kEmptyCode: return "EmptyCode";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

[[noreturn]] inline void throw_error(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + message);
}

}  // namespace oneshot

#endif  // ONESHOT_ERRORS_HPP_
