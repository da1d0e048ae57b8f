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

#ifndef SSAIR_SYNTAX_ELABORATE_H_
#define SSAIR_SYNTAX_ELABORATE_H_

#include <string>
#include <string_view>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"
#include "ssair/syntax/ast.h"

namespace ssair::syntax {

class ElaborationError : public ElabError {
 public:
  ElaborationError(ElabErrorKind kind, SourceLoc loc,
                   const std::string& message);
  const SourceLoc& loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

struct Program {
  Ctxt ctxt;
  Com com;
};

// Block arguments become the context, operations become bindings in
// order and the terminator becomes the return. `i_` resolves to
// params.width; symbols in attribute expressions (`2**n`) resolve through
// params.symbols. The result always passes TypeCheck; anything else throws
// ElaborationError.
Program Elaborate(const Dialect& dialect, const GenericAst& ast,
                  const ElabParams& params);

// Parse then Elaborate. Throws ParseError or ElaborationError.
Program ParseProgram(const Dialect& dialect, std::string_view text,
                     const ElabParams& params);

// Evaluates an attribute expression. Throws ElaborationError on unbound
// symbols, negative exponents or results that are unreasonably large.
BigInt EvalIntExpr(const IntExpr& e, const ElabParams& params);

}  // namespace ssair::syntax

#endif  // SSAIR_SYNTAX_ELABORATE_H_
