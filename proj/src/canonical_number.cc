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

#include "numcheck/canonical_number.h"

#include <limits>

namespace numcheck {

std::string_view ToString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kEmpty: return "empty";
    case ParseErrorKind::kUnexpectedChar: return "unexpected_char";
    case ParseErrorKind::kSecondDecimalPoint: return "second_decimal_point";
    case ParseErrorKind::kBadGrouping: return "bad_grouping";
    case ParseErrorKind::kMixedDigitScripts: return "mixed_digit_scripts";
    case ParseErrorKind::kUnknownWord: return "unknown_word";
    case ParseErrorKind::kIllFormedNumeral: return "ill_formed_numeral";
    case ParseErrorKind::kDanglingScaleWord: return "dangling_scale_word";
    case ParseErrorKind::kBadFormat: return "bad_format";
    case ParseErrorKind::kNonInteger: return "non_integer";
    case ParseErrorKind::kOutOfRange: return "out_of_range";
  }
  return "unknown";
}

void CanonicalNumber::Normalize() {
  // Trailing fractional zeros carry no value.
  while (scale_ > 0 && !digits_.empty() && digits_.back() == '0') {
    digits_.pop_back();
    --scale_;
  }
  size_t lead = 0;
  while (lead + 1 < digits_.size() && digits_[lead] == '0') ++lead;
  if (lead > 0) digits_.erase(0, lead);
  if (digits_.empty()) {
    digits_ = "0";
    scale_ = 0;
  }
  if (digits_ == "0") scale_ = 0;
}

Result<CanonicalNumber> CanonicalNumber::FromDigits(std::string digits, int scale) {
  if (digits.empty()) {
    return ParseError{ParseErrorKind::kEmpty, 0, "empty digit string"};
  }
  if (scale < 0) {
    return ParseError{ParseErrorKind::kBadFormat, 0, "negative scale"};
  }
  for (size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      return ParseError{ParseErrorKind::kUnexpectedChar, i,
                        std::string("non-digit character '") + digits[i] + "'"};
    }
  }
  // The coefficient must reach the units place; pad when all digits are
  // fractional (e.g. digits="5", scale=2 is 0.05 and stays as-is).
  CanonicalNumber n(std::move(digits), scale);
  n.Normalize();
  return n;
}

Result<CanonicalNumber> CanonicalNumber::FromPlainString(std::string_view s) {
  if (s.empty()) {
    return ParseError{ParseErrorKind::kEmpty, 0, "empty number string"};
  }
  std::string digits;
  digits.reserve(s.size());
  int scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.') {
      if (seen_point) {
        return ParseError{ParseErrorKind::kSecondDecimalPoint, i,
                          "second decimal point"};
      }
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++scale;
      seen_digit = true;
    } else {
      return ParseError{ParseErrorKind::kUnexpectedChar, i,
                        std::string("unexpected character '") + c + "'"};
    }
  }
  if (!seen_digit) {
    return ParseError{ParseErrorKind::kEmpty, 0, "no digits"};
  }
  CanonicalNumber n(std::move(digits), scale);
  n.Normalize();
  return n;
}

CanonicalNumber CanonicalNumber::FromUint(uint64_t n) {
  return CanonicalNumber(std::to_string(n), 0);
}

std::string CanonicalNumber::ToPlainString() const {
  if (scale_ == 0) return digits_;
  const size_t len = digits_.size();
  std::string out;
  if (len > static_cast<size_t>(scale_)) {
    out = digits_;
    out.insert(len - scale_, 1, '.');
  } else {
    out = "0.";
    out.append(scale_ - len, '0');
    out += digits_;
  }
  return out;
}

CanonicalNumber CanonicalNumber::ScaledByPowerOfTen(int k) const {
  CanonicalNumber n = *this;
  if (k >= 0) {
    const int from_scale = k < n.scale_ ? k : n.scale_;
    n.scale_ -= from_scale;
    n.digits_.append(k - from_scale, '0');
  } else {
    n.scale_ += -k;
  }
  n.Normalize();
  return n;
}

std::optional<uint64_t> CanonicalNumber::ToUint64() const {
  if (scale_ != 0) return std::nullopt;
  if (digits_.size() > 20) return std::nullopt;
  uint64_t v = 0;
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  for (char c : digits_) {
    const uint64_t d = static_cast<uint64_t>(c - '0');
    if (v > (kMax - d) / 10) return std::nullopt;
    v = v * 10 + d;
  }
  return v;
}

}  // namespace numcheck
