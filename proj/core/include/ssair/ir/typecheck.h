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

#ifndef SSAIR_IR_TYPECHECK_H_
#define SSAIR_IR_TYPECHECK_H_

#include <string>
#include <vector>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"

namespace ssair {

enum class TypeErrorKind {
  kUnknownOp,
  kArity,
  kTypeMismatch,
  kOutOfRange,
  kRegionMismatch,
  kInvalidType,
};

const char* ToString(TypeErrorKind kind);

struct TypeError {
  TypeErrorKind kind;
  // Binding positions from the outermost Com inwards, e.g. "2/r0/1" is
  // binding 1 of region 0 of binding 2. "ret" names the return.
  std::string position;
  std::string message;

  std::string ToString() const;
};

// Runtime replacement for intrinsic well-typing. Empty iff every binding,
// recursively through regions, matches its dialect signature.
std::vector<TypeError> TypeCheck(const Dialect& dialect, const Ctxt& ctxt,
                                 const Com& com);

// Throws IrError listing every type error.
void CheckWellTyped(const Dialect& dialect, const Ctxt& ctxt, const Com& com);

}  // namespace ssair

#endif  // SSAIR_IR_TYPECHECK_H_
