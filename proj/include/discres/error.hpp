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

#ifndef DISCRES_ERROR_HPP
#define DISCRES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace discres {

// Values mirror discres_status in discres.h.
enum class ErrorCode : int {
  kIncompatibleVariables = 1,
  kUnknownVariable,
  kParseError,
  kNotDivisible,
  kDivisionByZero,
  kZeroPolynomial,
  kBothConstantInV,
  kConstantInV,
  kVariableNotInOrder,
  kInvalidDimension,
  kDegenerateMinor,
  kInhomogeneousInput,
  kVariableCollision,
  kNotASquare,
  kInfeasibleSize,
  kDegenerateTrial,
  kTimeout,
  kInvalidArgument,
  kIo,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by parse(); position is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParseError, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace discres

#endif  // DISCRES_ERROR_HPP
