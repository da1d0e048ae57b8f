// Copyright 2026 The ssair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef SSAIR_TESTS_SUPPORT_TEST_UTIL_H_
#define SSAIR_TESTS_SUPPORT_TEST_UTIL_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ssair/dialects/all.h"
#include "ssair/syntax/elaborate.h"

namespace ssair {

// Readable parameter names in gtest output.
inline void PrintTo(DialectKind kind, std::ostream* os) { *os << ToString(kind); }

}  // namespace ssair

namespace ssair::testing {

syntax::Program Parse(const Dialect& d, std::string_view text,
                      const ElabParams& params = {});

ElabParams Width(unsigned w);

struct CorpusEntry {
  std::string name;
  DialectConfig config;
  std::string text;
};

// Every tests/corpus/*.mlir file, sorted by name. The first line of each
// file carries its flags: `// ssair: --dialect llvm --width 8`.
std::vector<CorpusEntry> LoadCorpus();

DialectConfig ConfigFromFlags(const std::string& flags);

}  // namespace ssair::testing

#endif  // SSAIR_TESTS_SUPPORT_TEST_UTIL_H_
