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

#include "numcheck/locale.h"

#include <algorithm>

#include "numcheck/utf8.h"

namespace numcheck {

namespace {

std::array<char32_t, 10> ScriptRange(char32_t zero) {
  std::array<char32_t, 10> s;
  for (int i = 0; i < 10; ++i) s[i] = zero + i;
  return s;
}

std::vector<LocaleSpec> MakeBuiltins() {
  std::vector<LocaleSpec> v;
  v.push_back(LocaleSpec{"en", U'.', U',', {3}, ScriptRange(U'0')});
  v.push_back(LocaleSpec{"de", U',', U'.', {3}, ScriptRange(U'0')});
  v.push_back(LocaleSpec{"zh", U'.', U',', {3}, ScriptRange(U'0')});
  v.push_back(LocaleSpec{"ne", U'.', U',', {3}, ScriptRange(U'०')});
  v.push_back(LocaleSpec{"ta", U'.', U',', {3}, ScriptRange(U'௦')});
  // Lakh/crore grouping variants; not the defaults.
  v.push_back(LocaleSpec{"ne_lakh", U'.', U',', {3, 2}, ScriptRange(U'०')});
  v.push_back(LocaleSpec{"ta_lakh", U'.', U',', {3, 2}, ScriptRange(U'௦')});
  return v;
}

const std::vector<LocaleSpec>& Builtins() {
  static const std::vector<LocaleSpec>* locales =
      new std::vector<LocaleSpec>(MakeBuiltins());
  return *locales;
}

// -1 if the code point is not a digit the locale can read.
int DigitValue(char32_t cp, const LocaleSpec& locale, bool* local) {
  if (cp >= U'0' && cp <= U'9') {
    *local = false;
    return static_cast<int>(cp - U'0');
  }
  for (int i = 0; i < 10; ++i) {
    if (locale.digit_script[i] == cp) {
      *local = true;
      return i;
    }
  }
  return -1;
}

// Expected size of the integer-part group at right-to-left index `j`; the
// last configured size repeats.
int GroupSizeAt(const std::vector<int>& grouping, size_t j) {
  if (grouping.empty()) return 3;
  return j < grouping.size() ? grouping[j] : grouping.back();
}

}  // namespace

const LocaleSpec* FindBuiltinLocale(std::string_view tag) {
  for (const LocaleSpec& l : Builtins()) {
    if (l.language_tag == tag) return &l;
  }
  return nullptr;
}

std::vector<std::string> BuiltinLocaleTags() {
  std::vector<std::string> tags;
  for (const LocaleSpec& l : Builtins()) tags.push_back(l.language_tag);
  return tags;
}

std::string RenderGrouped(const CanonicalNumber& value, const LocaleSpec& locale,
                          bool use_grouping, bool use_local_digits) {
  const std::string& digits = value.digits();
  const int scale = value.scale();
  std::string int_part;
  std::string frac_part;
  if (digits.size() > static_cast<size_t>(scale)) {
    int_part = digits.substr(0, digits.size() - scale);
    frac_part = digits.substr(digits.size() - scale);
  } else {
    int_part = "0";
    frac_part.assign(scale - digits.size(), '0');
    frac_part += digits;
  }

  std::string out;
  if (use_grouping) {
    // Split points counted from the right end of the integer part.
    std::vector<size_t> cuts;
    size_t from_right = 0;
    size_t j = 0;
    while (true) {
      from_right += static_cast<size_t>(GroupSizeAt(locale.grouping, j++));
      if (from_right >= int_part.size()) break;
      cuts.push_back(int_part.size() - from_right);
    }
    std::sort(cuts.begin(), cuts.end());
    size_t pos = 0;
    for (size_t cut : cuts) {
      out += int_part.substr(pos, cut - pos);
      utf8::Encode(locale.group_sep, &out);
      pos = cut;
    }
    out += int_part.substr(pos);
  } else {
    out = int_part;
  }
  if (!frac_part.empty()) {
    utf8::Encode(locale.decimal_sep, &out);
    out += frac_part;
  }
  if (use_local_digits && locale.HasLocalDigits()) {
    std::string localized;
    size_t i = 0;
    while (i < out.size()) {
      const char32_t cp = utf8::Decode(out, &i);
      if (cp >= U'0' && cp <= U'9') {
        utf8::Encode(locale.digit_script[cp - U'0'], &localized);
      } else {
        utf8::Encode(cp, &localized);
      }
    }
    out = std::move(localized);
  }
  return out;
}

Result<CanonicalNumber> ParseLocalized(std::string_view text,
                                       const LocaleSpec& locale) {
  if (text.empty()) {
    return ParseError{ParseErrorKind::kEmpty, 0, "empty token"};
  }
  enum class Script { kNone, kAscii, kLocal };
  Script script = Script::kNone;
  bool seen_decimal = false;
  std::string int_digits;
  std::string frac_digits;
  std::vector<size_t> group_lengths;  // integer-part segments, left to right
  size_t current_group = 0;
  bool any_group_sep = false;

  size_t i = 0;
  while (i < text.size()) {
    const size_t at = i;
    const char32_t cp = utf8::Decode(text, &i);
    bool local = false;
    const int d = DigitValue(cp, locale, &local);
    if (d >= 0) {
      const Script s = local ? Script::kLocal : Script::kAscii;
      if (script == Script::kNone) {
        script = s;
      } else if (script != s) {
        return ParseError{ParseErrorKind::kMixedDigitScripts, at,
                          "mixed digit scripts in one token"};
      }
      if (seen_decimal) {
        frac_digits.push_back(static_cast<char>('0' + d));
      } else {
        int_digits.push_back(static_cast<char>('0' + d));
        ++current_group;
      }
      continue;
    }
    if (cp == locale.decimal_sep) {
      if (seen_decimal) {
        return ParseError{ParseErrorKind::kSecondDecimalPoint, at,
                          "second decimal separator"};
      }
      seen_decimal = true;
      group_lengths.push_back(current_group);
      current_group = 0;
      continue;
    }
    if (cp == locale.group_sep) {
      if (seen_decimal) {
        return ParseError{ParseErrorKind::kBadGrouping, at,
                          "group separator after decimal separator"};
      }
      if (current_group == 0) {
        return ParseError{ParseErrorKind::kBadGrouping, at,
                          "empty group before separator"};
      }
      group_lengths.push_back(current_group);
      current_group = 0;
      any_group_sep = true;
      continue;
    }
    return ParseError{ParseErrorKind::kUnexpectedChar, at,
                      "unexpected character in number token"};
  }
  if (!seen_decimal) {
    group_lengths.push_back(current_group);
  }
  if (int_digits.empty() && frac_digits.empty()) {
    return ParseError{ParseErrorKind::kEmpty, 0, "no digits in token"};
  }
  if (any_group_sep) {
    if (group_lengths.empty() || group_lengths.back() == 0) {
      return ParseError{ParseErrorKind::kBadGrouping, text.size(),
                        "dangling group separator"};
    }
    // Validate right-to-left: all groups except the leftmost must match the
    // expected width exactly; the leftmost may be short but not empty.
    const size_t n = group_lengths.size();
    for (size_t j = 0; j + 1 < n; ++j) {
      const size_t right_index = j;
      const int want = GroupSizeAt(locale.grouping, right_index);
      const size_t got = group_lengths[n - 1 - j];
      if (got != static_cast<size_t>(want)) {
        return ParseError{ParseErrorKind::kBadGrouping, 0,
                          "group width inconsistent with locale grouping"};
      }
    }
    const int leftmost_max = GroupSizeAt(locale.grouping, n - 1);
    const size_t leftmost = group_lengths[0];
    if (leftmost == 0 || leftmost > static_cast<size_t>(leftmost_max)) {
      return ParseError{ParseErrorKind::kBadGrouping, 0,
                        "leading group width inconsistent with locale grouping"};
    }
  }
  std::string all = int_digits + frac_digits;
  if (all.empty()) {
    return ParseError{ParseErrorKind::kEmpty, 0, "no digits in token"};
  }
  return CanonicalNumber::FromDigits(std::move(all),
                                     static_cast<int>(frac_digits.size()));
}

std::vector<NumberToken> ScanNumberTokens(std::string_view sentence,
                                          const LocaleSpec& locale) {
  std::vector<NumberToken> tokens;
  const std::vector<utf8::CodePoint> cps = utf8::DecodeAll(sentence);
  auto is_digit = [&](size_t k) {
    bool local = false;
    return DigitValue(cps[k].value, locale, &local) >= 0;
  };
  auto is_sep = [&](size_t k) {
    const char32_t cp = cps[k].value;
    return cp == U'.' || cp == U',' || cp == locale.decimal_sep ||
           cp == locale.group_sep;
  };
  size_t i = 0;
  while (i < cps.size()) {
    if (!is_digit(i)) {
      ++i;
      continue;
    }
    const size_t start = i;
    size_t j = i + 1;
    while (j < cps.size()) {
      if (is_digit(j)) {
        ++j;
      } else if (is_sep(j) && j + 1 < cps.size() && is_digit(j + 1)) {
        j += 2;  // separator glued between digits stays in the token
      } else {
        break;
      }
    }
    const size_t begin = cps[start].offset;
    const size_t end = cps[j - 1].offset + cps[j - 1].size;
    tokens.push_back(NumberToken{
        begin, end, std::string(sentence.substr(begin, end - begin))});
    i = j;
  }
  return tokens;
}

}  // namespace numcheck
