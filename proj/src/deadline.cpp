/*
   Copyright 2026 The discres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "discres/deadline.hpp"

#include "discres/error.hpp"

namespace discres {
namespace {
thread_local std::optional<std::chrono::steady_clock::time_point> current_deadline;
}  // namespace

DeadlineScope::DeadlineScope(std::chrono::steady_clock::duration budget)
    : previous_(current_deadline) {
  current_deadline = std::chrono::steady_clock::now() + budget;
}

DeadlineScope::~DeadlineScope() { current_deadline = previous_; }

void poll_deadline() {
  if (current_deadline && std::chrono::steady_clock::now() > *current_deadline) {
    throw Error(ErrorCode::kTimeout, "operation exceeded its time budget");
  }
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kIncompatibleVariables: return "IncompatibleVariables";
    case ErrorCode::kUnknownVariable: return "UnknownVariable";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kBothConstantInV: return "BothConstantInV";
    case ErrorCode::kConstantInV: return "ConstantInV";
    case ErrorCode::kVariableNotInOrder: return "VariableNotInOrder";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kDegenerateMinor: return "DegenerateMinor";
    case ErrorCode::kInhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::kVariableCollision: return "VariableCollision";
    case ErrorCode::kNotASquare: return "NotASquare";
    case ErrorCode::kInfeasibleSize: return "InfeasibleSize";
    case ErrorCode::kDegenerateTrial: return "DegenerateTrial";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace discres
