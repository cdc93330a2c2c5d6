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

#include "coopvals/error.h"

#include <utility>

namespace coopvals {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPlayerCountExceeded: return "PlayerCountExceeded";
    case ErrorCode::kDuplicateCoalition: return "DuplicateCoalition";
    case ErrorCode::kNonzeroEmptyCoalition: return "NonzeroEmptyCoalition";
    case ErrorCode::kInvalidPlayerIndex: return "InvalidPlayerIndex";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kNonPositiveScale: return "NonPositiveScale";
    case ErrorCode::kEmptyBaseCoalition: return "EmptyBaseCoalition";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNotInClass: return "NotInClass";
    case ErrorCode::kBoundOrderViolated: return "BoundOrderViolated";
    case ErrorCode::kNotBalanced: return "NotBalanced";
    case ErrorCode::kNotRegularLowerBound: return "NotRegularLowerBound";
    case ErrorCode::kNonCovariantUpperBound: return "NonCovariantUpperBound";
    case ErrorCode::kDegenerateBounds: return "DegenerateBounds";
    case ErrorCode::kTooFewPlayers: return "TooFewPlayers";
    case ErrorCode::kSamplerExhausted: return "SamplerExhausted";
  }
  return "Unknown";
}

bool IsDomainError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotInClass:
    case ErrorCode::kBoundOrderViolated:
    case ErrorCode::kNotBalanced:
    case ErrorCode::kNotRegularLowerBound:
    case ErrorCode::kNonCovariantUpperBound:
    case ErrorCode::kDegenerateBounds:
    case ErrorCode::kTooFewPlayers:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(std::string(ErrorCodeName(code)) +
                         (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(std::move(detail)) {}

NotInClassError::NotInClassError(std::string class_name)
    : Error(ErrorCode::kNotInClass, "not applicable: " + class_name),
      class_name_(std::move(class_name)) {}

}  // namespace coopvals
