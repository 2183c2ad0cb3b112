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

#ifndef NUMCHECK_LOCALE_H_
#define NUMCHECK_LOCALE_H_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "numcheck/canonical_number.h"
#include "numcheck/result.h"

namespace numcheck {

// Per-language digit-form conventions: separator characters, grouping
// widths and the digit script. Everything the renderer and parser need to
// agree on for one language.
struct LocaleSpec {
  std::string language_tag;
  char32_t decimal_sep = U'.';
  char32_t group_sep = U',';
  // Group sizes counted from the right; the last entry repeats. {3} is
  // western grouping, {3, 2} is lakh/crore.
  std::vector<int> grouping{3};
  // Code points for digits 0..9. ASCII when the language writes Arabic
  // digits.
  std::array<char32_t, 10> digit_script{U'0', U'1', U'2', U'3', U'4',
                                        U'5', U'6', U'7', U'8', U'9'};

  bool HasLocalDigits() const { return digit_script[0] != U'0'; }
};

// Built-in locales: en, de, zh, ne, ta, plus ne_lakh / ta_lakh variants
// with South-Asian {3,2} grouping. Returns nullptr for unknown tags.
const LocaleSpec* FindBuiltinLocale(std::string_view tag);
std::vector<std::string> BuiltinLocaleTags();

// Renders the exact value under the locale's conventions. The integer part
// is grouped when `use_grouping`; the fractional part is never grouped.
std::string RenderGrouped(const CanonicalNumber& value, const LocaleSpec& locale,
                          bool use_grouping, bool use_local_digits);

// Parses a single number token written under the locale's conventions,
// accepting Arabic digits or the locale's own script (but not a mixture).
// Grouping is validated strictly: a separator in a position inconsistent
// with the locale's grouping is an error, not leniently accepted.
Result<CanonicalNumber> ParseLocalized(std::string_view text,
                                       const LocaleSpec& locale);

struct NumberToken {
  size_t begin = 0;  // byte offsets into the sentence
  size_t end = 0;
  std::string text;
};

// Maximal-munch extraction of digit-bearing tokens, including separators
// attached between digits. "COVID-19" yields "19"; "123.456,12 und 7"
// yields "123.456,12" and "7". Tokens are returned in order with
// non-overlapping spans; parsing happens downstream.
std::vector<NumberToken> ScanNumberTokens(std::string_view sentence,
                                          const LocaleSpec& locale);

}  // namespace numcheck

#endif  // NUMCHECK_LOCALE_H_
