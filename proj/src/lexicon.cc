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

#include <array>
#include <sstream>

#include "causemap/base.h"
#include "causemap/textproc.h"
#include "embedded_data.h"

namespace causemap {

namespace {

constexpr std::array<std::string_view, 11> kPosNames = {
    "NOUN", "VERB", "ADJ", "ADV", "DET", "PRON",
    "ADP", "CONJ", "NUM", "PUNCT", "OTHER"};

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

// Calls |fn| with each non-comment, non-blank line and its 1-based number.
template <typename Fn>
void ForEachLine(std::istream &in, Fn fn) {
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    fn(std::string_view(line), n);
  }
}

std::string ExceptionKey(std::string_view word, Pos pos) {
  std::string key(word);
  key += '\t';
  key += PosName(pos);
  return key;
}

}  // namespace

std::string_view PosName(Pos pos) {
  return kPosNames[static_cast<size_t>(pos)];
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

Lexicon Lexicon::Load(std::istream &lexicon, std::istream &exceptions,
                      std::istream &stop_verbs) {
  Lexicon lex;
  ForEachLine(lexicon, [&](std::string_view line, size_t n) {
    auto f = SplitTabs(line);
    std::optional<Pos> pos = f.size() == 2 ? ParsePos(f[1]) : std::nullopt;
    if (!pos || f[0].empty()) {
      throw DataError("lexicon line " + std::to_string(n) + " is malformed");
    }
    auto [it, inserted] = lex.words_.try_emplace(
        std::string(f[0]), Entry{*pos, 0, lex.words_.size()});
    it->second.tags |= static_cast<uint16_t>(1u << static_cast<unsigned>(*pos));
  });
  ForEachLine(exceptions, [&](std::string_view line, size_t n) {
    auto f = SplitTabs(line);
    std::optional<Pos> pos = f.size() == 3 ? ParsePos(f[1]) : std::nullopt;
    if (!pos || f[0].empty() || f[2].empty()) {
      throw DataError("exception line " + std::to_string(n) + " is malformed");
    }
    lex.exceptions_.try_emplace(ExceptionKey(f[0], *pos), std::string(f[2]));
  });
  ForEachLine(stop_verbs, [&](std::string_view line, size_t) {
    lex.stop_verbs_.insert(std::string(TrimWhitespace(line)));
  });
  return lex;
}

const Lexicon &Lexicon::Default() {
  static const Lexicon lexicon = [] {
    std::istringstream words(std::string(embedded::LexiconData()));
    std::istringstream exceptions(std::string(embedded::LemmaExceptionsData()));
    std::istringstream stop(std::string(embedded::StopVerbsData()));
    return Load(words, exceptions, stop);
  }();
  return lexicon;
}

std::optional<Pos> Lexicon::Lookup(std::string_view word) const {
  auto it = words_.find(std::string(word));
  if (it == words_.end()) return std::nullopt;
  return it->second.primary;
}

bool Lexicon::Admits(std::string_view word, Pos pos) const {
  auto it = words_.find(std::string(word));
  return it != words_.end() &&
         (it->second.tags & (1u << static_cast<unsigned>(pos))) != 0;
}

std::optional<size_t> Lexicon::Rank(std::string_view word) const {
  auto it = words_.find(std::string(word));
  if (it == words_.end()) return std::nullopt;
  return it->second.rank;
}

const std::string *Lexicon::Exception(std::string_view word, Pos pos) const {
  auto it = exceptions_.find(ExceptionKey(word, pos));
  return it == exceptions_.end() ? nullptr : &it->second;
}

bool Lexicon::IsStopVerb(std::string_view lemma) const {
  return stop_verbs_.count(std::string(lemma)) > 0;
}

}  // namespace causemap
