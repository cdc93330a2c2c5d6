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

#include "coopvals/check.h"

#include <utility>

namespace coopvals {

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkip: return "skip";
  }
  return "unknown";
}

CheckOutcome CheckOutcome::Pass(std::string id) {
  CheckOutcome out;
  out.check_id = std::move(id);
  return out;
}

CheckOutcome CheckOutcome::Skip(std::string id, std::string reason) {
  CheckOutcome out;
  out.check_id = std::move(id);
  out.verdict = Verdict::kSkip;
  out.reason = std::move(reason);
  return out;
}

CheckOutcome CheckOutcome::Fail(std::string id, Witness witness) {
  CheckOutcome out;
  out.check_id = std::move(id);
  out.verdict = Verdict::kFail;
  out.witness = std::move(witness);
  return out;
}

int FirstDifference(const PayoffVector& lhs, const PayoffVector& rhs) {
  if (lhs.size() != rhs.size()) return 0;
  for (int i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) return i;
  }
  return -1;
}

int FirstExcess(const PayoffVector& lhs, const PayoffVector& rhs) {
  if (lhs.size() != rhs.size()) return 0;
  for (int i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i]) return i;
  }
  return -1;
}

CheckOutcome CompareEqual(std::string id, const TuGame& v, std::string inputs,
                          const PayoffVector& lhs, const PayoffVector& rhs) {
  const int diff = FirstDifference(lhs, rhs);
  if (diff < 0) return CheckOutcome::Pass(std::move(id));
  return CheckOutcome::Fail(std::move(id),
                            Witness{v, std::move(inputs), lhs, rhs, diff});
}

}  // namespace coopvals
