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

#include "coopvals/rational.h"

#include <cctype>
#include <cstdlib>
#include <string>

#include "coopvals/error.h"

namespace coopvals {
namespace {

[[noreturn]] void Fail(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kParseError,
              "bad rational literal '" + std::string(text) + "': " +
                  std::string(why));
}

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// [+-]digits
mpz_class ParseInteger(std::string_view whole, std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!AllDigits(s)) Fail(whole, "expected digits");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  if (s.empty()) Fail(text, "empty");

  if (const size_t slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class num = ParseInteger(text, s.substr(0, slash));
    const std::string_view den_text = s.substr(slash + 1);
    if (!AllDigits(den_text)) Fail(text, "denominator must be a positive integer");
    const mpz_class den(std::string(den_text), 10);
    if (den == 0) Fail(text, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional fraction and exponent.
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const size_t e = s.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class exp_value = ParseInteger(text, s.substr(e + 1));
    if (!exp_value.fits_slong_p() || abs(exp_value) > 100000) {
      Fail(text, "exponent out of range");
    }
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (const size_t dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) Fail(text, "no digits");
    if ((!int_part.empty() && !AllDigits(int_part)) ||
        (!frac_part.empty() && !AllDigits(frac_part))) {
      Fail(text, "expected digits");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!AllDigits(s)) Fail(text, "expected an integer, p/q or decimal");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& value) { return value.get_str(); }

std::string ToDecimalString(const Rational& value, int digits) {
  // Round half away from zero at `digits` fractional places, exactly.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = abs(value) * scale + Rational(1, 2);
  const mpz_class rounded = scaled.get_num() / scaled.get_den();
  std::string body = rounded.get_str();
  if (static_cast<int>(body.size()) <= digits) {
    body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
  }
  std::string out = body.substr(0, body.size() - digits);
  if (digits > 0) out += "." + body.substr(body.size() - digits);
  if (value < 0 && rounded != 0) out.insert(0, "-");
  return out;
}

Rational PayoffVector::Sum() const {
  Rational total = 0;
  for (const Rational& x : values_) total += x;
  return total;
}

bool PayoffVector::IsZero() const {
  for (const Rational& x : values_) {
    if (x != 0) return false;
  }
  return true;
}

bool PayoffVector::DominatedBy(const PayoffVector& other) const {
  if (size() != other.size()) {
    throw Error(ErrorCode::kLengthMismatch, "payoff vectors differ in length");
  }
  for (int i = 0; i < size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

PayoffVector& PayoffVector::operator+=(const PayoffVector& other) {
  if (size() != other.size()) {
    throw Error(ErrorCode::kLengthMismatch, "payoff vectors differ in length");
  }
  for (int i = 0; i < size(); ++i) values_[i] += other.values_[i];
  return *this;
}

PayoffVector& PayoffVector::operator-=(const PayoffVector& other) {
  if (size() != other.size()) {
    throw Error(ErrorCode::kLengthMismatch, "payoff vectors differ in length");
  }
  for (int i = 0; i < size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

PayoffVector& PayoffVector::operator*=(const Rational& scale) {
  for (Rational& x : values_) x *= scale;
  return *this;
}

PayoffVector PayoffVector::Constant(int players, const Rational& value) {
  return PayoffVector(std::vector<Rational>(static_cast<size_t>(players), value));
}

std::string ToString(const PayoffVector& v) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += ToString(v[i]);
  }
  return out;
}

}  // namespace coopvals
