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

#ifndef COOPVALS_RATIONAL_H_
#define COOPVALS_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coopvals {

// Exact arbitrary-precision rational. All worths, bounds and payoffs use it.
using Rational = mpq_class;

// Parses an exact rational literal:
//   integer            "-12"
//   fraction           "7/3"   (denominator must be positive)
//   decimal            "2.25", "-0.5", "1e3", "1.5E-2"
// Decimals are converted digit by digit, never through binary floating point.
// Throws Error(kParseError) on anything else.
Rational ParseRational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rational& value);

// Fixed-point decimal approximation for human-readable output.
std::string ToDecimalString(const Rational& value, int digits = 6);

// A per-player payoff vector: allocations and bound vectors.
class PayoffVector {
 public:
  PayoffVector() = default;
  explicit PayoffVector(int players) : values_(static_cast<size_t>(players)) {}
  explicit PayoffVector(std::vector<Rational> values)
      : values_(std::move(values)) {}
  PayoffVector(std::initializer_list<Rational> values) : values_(values) {}

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int i) const { return values_[i]; }
  Rational& operator[](int i) { return values_[i]; }

  std::span<const Rational> values() const { return values_; }
  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  Rational Sum() const;
  bool IsZero() const;

  // Component-wise a <= b; sizes must agree.
  bool DominatedBy(const PayoffVector& other) const;

  PayoffVector& operator+=(const PayoffVector& other);
  PayoffVector& operator-=(const PayoffVector& other);
  PayoffVector& operator*=(const Rational& scale);

  friend PayoffVector operator+(PayoffVector a, const PayoffVector& b) {
    return a += b;
  }
  friend PayoffVector operator-(PayoffVector a, const PayoffVector& b) {
    return a -= b;
  }
  friend PayoffVector operator*(const Rational& s, PayoffVector a) {
    return a *= s;
  }
  friend bool operator==(const PayoffVector& a, const PayoffVector& b) {
    return a.values_ == b.values_;
  }

  static PayoffVector Constant(int players, const Rational& value);

 private:
  std::vector<Rational> values_;
};

using Allocation = PayoffVector;
using BoundVector = PayoffVector;

// Space separated "p/q" components.
std::string ToString(const PayoffVector& v);

}  // namespace coopvals

#endif  // COOPVALS_RATIONAL_H_
