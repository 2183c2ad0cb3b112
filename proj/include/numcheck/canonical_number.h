// Copyright 2026 The numcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMCHECK_CANONICAL_NUMBER_H_
#define NUMCHECK_CANONICAL_NUMBER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "numcheck/result.h"

namespace numcheck {

// Exact non-negative decimal value: a digit-string coefficient and a
// non-negative scale, denoting digits * 10^(-scale). This is the single
// ground truth every surface representation reduces to; judging compares
// these values, never floating point.
//
// The stored form is normalized: no redundant leading zeros, no trailing
// fractional zeros. "5", "5.0" and "05.00" all construct the same value,
// so value equivalence is plain operator==.
class CanonicalNumber {
 public:
  // Zero.
  CanonicalNumber() : digits_("0"), scale_(0) {}

  // Parses a plain decimal string such as "123.45". No signs, no
  // separators, at most one '.', at least one digit.
  static Result<CanonicalNumber> FromPlainString(std::string_view s);

  // Builds from a raw coefficient and scale, normalizing. `digits` must be
  // non-empty and all in '0'..'9'; `scale` must be non-negative.
  static Result<CanonicalNumber> FromDigits(std::string digits, int scale);

  static CanonicalNumber FromUint(uint64_t n);

  // Coefficient, most significant digit first. Never empty.
  const std::string& digits() const { return digits_; }
  // Count of fractional digits. Zero for integers.
  int scale() const { return scale_; }

  bool IsZero() const { return digits_ == "0"; }
  bool IsInteger() const { return scale_ == 0; }

  // Digit characters of the value with the decimal point dropped;
  // "123.45" -> "12345". Used for digit-level error classification.
  std::string DigitString() const { return digits_; }

  std::string ToPlainString() const;

  // Exact value * 10^k. k may be negative; the result is always
  // representable (scale grows as needed).
  CanonicalNumber ScaledByPowerOfTen(int k) const;

  // Integer value if it is one and fits.
  std::optional<uint64_t> ToUint64() const;

  friend bool operator==(const CanonicalNumber&, const CanonicalNumber&) = default;

 private:
  CanonicalNumber(std::string digits, int scale)
      : digits_(std::move(digits)), scale_(scale) {}
  void Normalize();

  std::string digits_;
  int scale_;
};

}  // namespace numcheck

#endif  // NUMCHECK_CANONICAL_NUMBER_H_
