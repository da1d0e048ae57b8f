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

#include "ssair/rewrite/text_rewrite.h"

#include "ssair/syntax/elaborate.h"

namespace ssair {

PeepholeRewrite InstantiateRewrite(const Dialect& dialect,
                                   const RewriteText& text,
                                   const ElabParams& params) {
  syntax::Program lhs = syntax::ParseProgram(dialect, text.lhs, params);
  syntax::Program rhs = syntax::ParseProgram(dialect, text.rhs, params);
  if (!(lhs.ctxt == rhs.ctxt)) {
    throw IrError("rewrite '" + text.name +
                  "': lhs and rhs have different block arguments");
  }
  return PeepholeRewrite::Make(dialect, text.name, lhs.ctxt,
                               std::move(lhs.com), std::move(rhs.com),
                               text.mode);
}

}  // namespace ssair
