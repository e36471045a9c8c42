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

// Error types, timestamps and small string helpers shared by all modules.

#ifndef CAUSEMAP_BASE_H_
#define CAUSEMAP_BASE_H_

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace causemap {

inline constexpr std::string_view kVersion = "1.0.0";

// Caller passed a value outside an operation's domain (bad fraction, empty
// query, unknown commenter).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input data is unusable: unreadable stream, corrupt snapshot.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seconds since the Unix epoch, UTC.
struct Timestamp {
  int64_t seconds = 0;

  friend auto operator<=>(const Timestamp &, const Timestamp &) = default;
};

// Parses RFC 3339 timestamps such as "2019-04-01T12:00:00Z" or
// "2019-04-01T14:00:00.250+02:00". Fractional seconds are truncated.
std::optional<Timestamp> ParseTimestamp(std::string_view text);

// Formats as "YYYY-MM-DDTHH:MM:SSZ".
std::string FormatTimestamp(Timestamp ts);

// 64-bit FNV-1a. Stable across platforms, used for ids and digests.
uint64_t Fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL);

// Lower-case hexadecimal, zero padded to 16 digits.
std::string Hex64(uint64_t value);

// True if |text| is well-formed UTF-8.
bool IsValidUtf8(std::string_view text);

// ASCII lower-casing; bytes >= 0x80 are copied unchanged.
std::string AsciiLower(std::string_view text);

// Strips ASCII whitespace from both ends.
std::string_view TrimWhitespace(std::string_view text);

// Uniform integer in [0, n) by rejection sampling, n > 0. Unlike
// std::uniform_int_distribution the result is the same on every standard
// library.
uint64_t UniformIndex(std::mt19937_64 &rng, uint64_t n);

// Uniform double in [0, 1) from the top 53 bits of one draw.
double UniformUnit(std::mt19937_64 &rng);

}  // namespace causemap

#endif  // CAUSEMAP_BASE_H_
