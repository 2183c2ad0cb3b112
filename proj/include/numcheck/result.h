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

#ifndef NUMCHECK_RESULT_H_
#define NUMCHECK_RESULT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace numcheck {

// Parse failures are ordinary data here: the evaluator keeps unparseable
// tokens around and classifies errors from their kind, so parsers return
// Result<T> instead of throwing.
enum class ParseErrorKind {
  kEmpty,
  kUnexpectedChar,
  kSecondDecimalPoint,
  kBadGrouping,
  kMixedDigitScripts,
  kUnknownWord,
  kIllFormedNumeral,
  kDanglingScaleWord,
  kBadFormat,
  kNonInteger,
  kOutOfRange,
};

std::string_view ToString(ParseErrorKind kind);

struct ParseError {
  ParseErrorKind kind;
  size_t position = 0;  // byte offset into the offending input
  std::string message;
};

template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}                // NOLINT: implicit
  Result(ParseError error) : v_(std::move(error)) {}       // NOLINT: implicit
  Result(ParseErrorKind kind, size_t position, std::string message)
      : v_(ParseError{kind, position, std::move(message)}) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result::value on error: " + error().message);
    return std::get<T>(v_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result::value on error: " + error().message);
    return std::get<T>(std::move(v_));
  }
  const T& operator*() const& { return value(); }

  const ParseError& error() const {
    if (ok()) throw std::logic_error("Result::error on value");
    return std::get<ParseError>(v_);
  }

 private:
  std::variant<T, ParseError> v_;
};

}  // namespace numcheck

#endif  // NUMCHECK_RESULT_H_
