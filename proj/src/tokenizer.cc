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

#include <algorithm>
#include <array>

#include "causemap/base.h"
#include "causemap/textproc.h"
#include "textproc_internal.h"

namespace causemap {
namespace internal {

CodePoint Decode(std::string_view s, size_t i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) return {c, 1};
  size_t len = (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3
             : (c & 0xF8) == 0xF0 ? 4 : 0;
  if (len == 0 || i + len > s.size()) return {0xFFFD, 1};
  uint32_t cp = c & (0x7F >> len);
  for (size_t k = 1; k < len; ++k) {
    unsigned char cc = static_cast<unsigned char>(s[i + k]);
    if ((cc & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (cc & 0x3F);
  }
  return {cp, len};
}

bool IsSpace(uint32_t cp) {
  return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
         cp == '\v' || cp == 0xA0 || cp == 0x1680 ||
         (cp >= 0x2000 && cp <= 0x200B) || cp == 0x2028 || cp == 0x2029 ||
         cp == 0x202F || cp == 0x205F || cp == 0x3000 || cp == 0xFEFF;
}

bool IsWordChar(uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
           (cp >= '0' && cp <= '9');
  }
  return (cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7) ||
         (cp >= 0x300 && cp <= 0x52F) || (cp >= 0x1E00 && cp <= 0x1FFF) ||
         (cp >= 0x3040 && cp <= 0x30FF) || (cp >= 0x4E00 && cp <= 0x9FFF) ||
         (cp >= 0xAC00 && cp <= 0xD7AF);
}

bool IsApostrophe(uint32_t cp) { return cp == '\'' || cp == 0x2019; }

bool IsClosingQuote(uint32_t cp) {
  return cp == '"' || cp == '\'' || cp == ')' || cp == ']' || cp == '}' ||
         cp == 0x201D || cp == 0x2019 || cp == 0xBB;
}

bool IsOpeningQuote(uint32_t cp) {
  return cp == '"' || cp == '\'' || cp == '(' || cp == '[' || cp == 0x201C ||
         cp == 0x2018 || cp == 0xAB;
}

bool IsTerminal(std::string_view surface) {
  return !surface.empty() &&
         surface.find_first_not_of(".!?") == std::string_view::npos;
}

bool IsAbbreviation(std::string_view surface) {
  return surface.size() > 1 && surface.back() == '.' &&
         std::any_of(surface.begin(), surface.end(), [](char c) {
           return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
         });
}

bool IsUrl(std::string_view surface) {
  std::string lower = AsciiLower(surface.substr(0, 8));
  return lower.rfind("http://", 0) == 0 || lower.rfind("https://", 0) == 0 ||
         lower.rfind("www.", 0) == 0;
}

std::string NormalizeApostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x80\x99") == 0) {
      out += '\'';
      i += 2;
    } else {
      out += text[i];
    }
  }
  return out;
}

}  // namespace internal

namespace {

using internal::CodePoint;
using internal::Decode;
using internal::IsApostrophe;
using internal::IsSpace;
using internal::IsWordChar;

// Words that keep a following period ("Mr.", "etc.").
constexpr std::array<std::string_view, 19> kAbbreviations = {
    "al", "approx", "cf", "dr", "eg", "esp", "etc", "fig", "ie", "inc",
    "jr", "ltd", "mr", "mrs", "ms", "prof", "sr", "st", "vs"};

constexpr std::array<std::string_view, 6> kClitics = {"s", "re", "ve",
                                                      "ll", "d", "m"};

bool IsAsciiLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool WordCharAt(std::string_view s, size_t i) {
  return i < s.size() && IsWordChar(Decode(s, i).cp);
}

// Length of an initialism such as "e.g." or "U.S." starting at |i|, or 0.
size_t InitialismLength(std::string_view s, size_t i) {
  size_t j = i;
  int letters = 0;
  while (j + 1 < s.size() && IsAsciiLetter(s[j]) && s[j + 1] == '.') {
    j += 2;
    ++letters;
  }
  if (letters < 2 || WordCharAt(s, j)) return 0;
  return j - i;
}

size_t UrlLength(std::string_view s, size_t i) {
  if (!internal::IsUrl(s.substr(i))) return 0;
  size_t j = i;
  while (j < s.size()) {
    CodePoint c = Decode(s, j);
    if (IsSpace(c.cp)) break;
    j += c.len;
  }
  while (j > i && std::string_view(".,;:!?)]}\"'").find(s[j - 1]) !=
                      std::string_view::npos) {
    --j;
  }
  return j - i;
}

class TokenWriter {
 public:
  explicit TokenWriter(std::string_view text) : text_(text) {}

  void Emit(size_t start, size_t end) {
    if (end <= start) return;
    Token t;
    t.surface = std::string(text_.substr(start, end - start));
    t.start = start;
    t.end = end;
    tokens_.push_back(std::move(t));
  }

  std::vector<Token> Take() { return std::move(tokens_); }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
};

// Scans a word starting at |start|; emits it (possibly split at a clitic)
// and returns the offset after it.
size_t ScanWord(std::string_view s, size_t start, TokenWriter *out) {
  size_t j = start;
  while (j < s.size()) {
    CodePoint c = Decode(s, j);
    if (IsWordChar(c.cp)) {
      j += c.len;
      continue;
    }
    if (c.cp == '-' && WordCharAt(s, j + 1)) {
      j += 1;
      continue;
    }
    if ((c.cp == '.' || c.cp == ',') && j > start && IsDigit(s[j - 1]) &&
        j + 1 < s.size() && IsDigit(s[j + 1])) {
      j += 1;
      continue;
    }
    if (IsApostrophe(c.cp) && WordCharAt(s, j + c.len)) {
      size_t k = j + c.len;
      while (k < s.size() && IsAsciiLetter(s[k])) ++k;
      std::string tail = AsciiLower(s.substr(j + c.len, k - j - c.len));
      bool closed = !WordCharAt(s, k);
      if (closed && tail == "t" && j - 1 > start &&
          (s[j - 1] == 'n' || s[j - 1] == 'N')) {
        out->Emit(start, j - 1);
        out->Emit(j - 1, k);
        return k;
      }
      if (closed && std::find(kClitics.begin(), kClitics.end(), tail) !=
                        kClitics.end()) {
        out->Emit(start, j);
        out->Emit(j, k);
        return k;
      }
      // Name-internal apostrophe ("O'Brien").
      j = k;
      continue;
    }
    break;
  }
  if (j < s.size() && s[j] == '.') {
    std::string word = AsciiLower(s.substr(start, j - start));
    if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
        kAbbreviations.end()) {
      ++j;
    }
  }
  out->Emit(start, j);
  return j;
}

}  // namespace

std::vector<Token> Tokenize(std::string_view text) {
  TokenWriter out(text);
  size_t i = 0;
  while (i < text.size()) {
    CodePoint c = Decode(text, i);
    if (IsSpace(c.cp)) {
      i += c.len;
      continue;
    }
    if (size_t n = UrlLength(text, i)) {
      out.Emit(i, i + n);
      i += n;
      continue;
    }
    if (IsWordChar(c.cp)) {
      if (size_t n = InitialismLength(text, i)) {
        out.Emit(i, i + n);
        i += n;
      } else {
        i = ScanWord(text, i, &out);
      }
      continue;
    }
    size_t j = i + c.len;
    if (c.cp == '.' || c.cp == '!' || c.cp == '?') {
      while (j < text.size() &&
             (text[j] == '.' || text[j] == '!' || text[j] == '?')) {
        ++j;
      }
    } else if (c.cp < 0x80) {
      while (j < text.size() && text[j] == static_cast<char>(c.cp)) ++j;
    }
    out.Emit(i, j);
    i = j;
  }
  return out.Take();
}

std::vector<Sentence> SplitSentences(std::string_view text) {
  std::vector<Token> tokens = Tokenize(text);
  std::vector<Sentence> sentences;
  if (tokens.empty()) {
    if (!text.empty()) sentences.push_back(Sentence{{}, 0, text.size()});
    return sentences;
  }

  auto first_cp = [&](size_t k) { return Decode(tokens[k].surface, 0).cp; };
  auto starts_upper = [&](size_t k) {
    char c = tokens[k].surface[0];
    return c >= 'A' && c <= 'Z';
  };
  auto gap = [&](size_t k) {
    return text.substr(tokens[k].end, tokens[k + 1].start - tokens[k].end);
  };
  auto blank_line = [](std::string_view g) {
    size_t nl = g.find('\n');
    return nl != std::string_view::npos &&
           g.find('\n', nl + 1) != std::string_view::npos;
  };

  std::vector<size_t> ends;  // index of last token of each sentence
  const size_t n = tokens.size();
  for (size_t k = 0; k + 1 < n; ++k) {
    if (internal::IsTerminal(tokens[k].surface)) {
      size_t m = k;
      while (m + 1 < n && gap(m).empty() &&
             tokens[m + 1].surface.size() <= 3 &&
             internal::IsClosingQuote(first_cp(m + 1))) {
        ++m;
      }
      if (m + 1 == n) break;
      if (!gap(m).empty()) {
        bool next_upper =
            starts_upper(m + 1) ||
            (m + 2 < n && internal::IsOpeningQuote(first_cp(m + 1)) &&
             starts_upper(m + 2));
        if (next_upper) {
          ends.push_back(m);
          k = m;
          continue;
        }
      }
      if (m > k && blank_line(gap(m))) {
        ends.push_back(m);
        k = m;
        continue;
      }
    }
    if (blank_line(gap(k))) ends.push_back(k);
  }
  ends.push_back(n - 1);

  size_t first = 0;
  for (size_t e : ends) {
    Sentence s;
    s.start = sentences.empty() ? 0 : tokens[first].start;
    s.tokens.assign(std::make_move_iterator(tokens.begin() + first),
                    std::make_move_iterator(tokens.begin() + e + 1));
    if (!sentences.empty()) sentences.back().end = s.start;
    sentences.push_back(std::move(s));
    first = e + 1;
  }
  sentences.back().end = text.size();
  return sentences;
}

}  // namespace causemap
