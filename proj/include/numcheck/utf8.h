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

#ifndef NUMCHECK_UTF8_H_
#define NUMCHECK_UTF8_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace numcheck::utf8 {

// Decodes the code point starting at byte offset `i` and advances `i` past
// it. Malformed bytes decode as U+FFFD and advance one byte; decoding never
// fails.
char32_t Decode(std::string_view s, size_t* i);

void Encode(char32_t cp, std::string* out);
std::string Encode(char32_t cp);

struct CodePoint {
  char32_t value;
  size_t offset;  // byte offset of the first byte
  size_t size;    // encoded length in bytes
};

std::vector<CodePoint> DecodeAll(std::string_view s);

}  // namespace numcheck::utf8

#endif  // NUMCHECK_UTF8_H_
