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

// Data assets compiled into the library (see cmake/embed.cmake).

#ifndef CAUSEMAP_SRC_EMBEDDED_DATA_H_
#define CAUSEMAP_SRC_EMBEDDED_DATA_H_

#include <string_view>

namespace causemap::embedded {

std::string_view LexiconData();
std::string_view LemmaExceptionsData();
std::string_view StopVerbsData();

}  // namespace causemap::embedded

#endif  // CAUSEMAP_SRC_EMBEDDED_DATA_H_
