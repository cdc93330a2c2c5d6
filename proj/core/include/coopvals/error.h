// Copyright 2026 The coopvals Authors
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

#ifndef COOPVALS_ERROR_H_
#define COOPVALS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coopvals {

enum class ErrorCode {
  // Construction and input errors.
  kPlayerCountExceeded,
  kDuplicateCoalition,
  kNonzeroEmptyCoalition,
  kInvalidPlayerIndex,
  kLengthMismatch,
  kNonPositiveScale,
  kEmptyBaseCoalition,
  kParseError,
  // Domain errors: a value or functional is not defined for the game.
  kNotInClass,
  kBoundOrderViolated,
  kNotBalanced,
  kNotRegularLowerBound,
  kNonCovariantUpperBound,
  kDegenerateBounds,
  kTooFewPlayers,
  // Sampling.
  kSamplerExhausted,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the codes that signal "this value/functional does not apply to
// this game" as opposed to malformed input.
bool IsDomainError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

// Raised by class guards. `class_name` names the class of games the value is
// defined on, e.g. "semi-balanced".
class NotInClassError : public Error {
 public:
  explicit NotInClassError(std::string class_name);

  const std::string& class_name() const { return class_name_; }

 private:
  std::string class_name_;
};

}  // namespace coopvals

#endif  // COOPVALS_ERROR_H_
