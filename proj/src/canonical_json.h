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

#ifndef CAUSEMAP_SRC_CANONICAL_JSON_H_
#define CAUSEMAP_SRC_CANONICAL_JSON_H_

#include <string>

#include "json.hpp"

namespace causemap::internal {

// "%.6f", with negative zero printed as "0.000000" and non-finite values
// as "0.000000".
std::string FormatReal(double value);

// Compact dump with object keys in byte order and reals via FormatReal.
std::string CanonicalDump(const nlohmann::json &value);

}  // namespace causemap::internal

#endif  // CAUSEMAP_SRC_CANONICAL_JSON_H_
