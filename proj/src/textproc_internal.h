// Copyright 2026 The causemap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAUSEMAP_SRC_TEXTPROC_INTERNAL_H_
#define CAUSEMAP_SRC_TEXTPROC_INTERNAL_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace causemap::internal {

struct CodePoint {
  uint32_t cp;
  size_t len;
};

// Decodes the code point at byte |i|; invalid sequences yield U+FFFD with
// length 1.
CodePoint Decode(std::string_view s, size_t i);

bool IsSpace(uint32_t cp);
bool IsWordChar(uint32_t cp);
bool IsApostrophe(uint32_t cp);
bool IsClosingQuote(uint32_t cp);
bool IsOpeningQuote(uint32_t cp);

// Token made only of '.', '!' and '?'.
bool IsTerminal(std::string_view surface);
// Word token ending in a period ("e.g.", "Mr.").
bool IsAbbreviation(std::string_view surface);
bool IsUrl(std::string_view surface);

// Replaces U+2019 with an ASCII apostrophe.
std::string NormalizeApostrophes(std::string_view text);

}  // namespace causemap::internal

#endif  // CAUSEMAP_SRC_TEXTPROC_INTERNAL_H_
