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

#ifndef SSAIR_IR_INTERPRETER_H_
#define SSAIR_IR_INTERPRETER_H_

#include <vector>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"
#include "ssair/ir/value.h"

namespace ssair {

// Looks up the operands, wraps each region body as an evaluator and hands
// off to the dialect. Throws IrError if an operand or the dialect's result
// disagrees with the expected type.
Value DenoteExpr(const Dialect& dialect, const Expr& expr,
                 const Valuation& valuation, EffectState* state = nullptr);

// Extends the valuation with each binding in order, then reads the
// returned variable.
Value DenoteCom(const Dialect& dialect, const Com& com,
                const Valuation& valuation, EffectState* state = nullptr);

// Evaluates `lets` on top of `valuation` and returns the extended
// valuation (one new slot per binding).
Valuation EvalLets(const Dialect& dialect, const std::vector<Expr>& lets,
                   Valuation valuation, EffectState* state = nullptr);

}  // namespace ssair

#endif  // SSAIR_IR_INTERPRETER_H_
