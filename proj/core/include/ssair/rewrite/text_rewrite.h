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

#ifndef SSAIR_REWRITE_TEXT_REWRITE_H_
#define SSAIR_REWRITE_TEXT_REWRITE_H_

#include <string>

#include "ssair/ir/dialect.h"
#include "ssair/rewrite/peephole.h"

namespace ssair {

// A rewrite written as two MLIR snippets over the same block arguments.
// Snippets may use `i_` and attribute expressions such as `2**n`.
struct RewriteText {
  std::string name;
  std::string lhs;
  std::string rhs;
  CheckMode mode = CheckMode::kExact;
};

// Elaborates both sides with `params` and validates the pair. Throws
// ParseError, ElabError or IrError.
PeepholeRewrite InstantiateRewrite(const Dialect& dialect,
                                   const RewriteText& text,
                                   const ElabParams& params);

}  // namespace ssair

#endif  // SSAIR_REWRITE_TEXT_REWRITE_H_
