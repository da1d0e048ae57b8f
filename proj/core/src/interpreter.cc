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

#include "ssair/ir/interpreter.h"

#include <string>

namespace ssair {

Value RegionEvaluator::operator()(const Valuation& entry) const {
  if (!entry.Inhabits(*entry_)) {
    throw IrError("region entry valuation does not match its signature");
  }
  return DenoteCom(*dialect_, *body_, entry, state_);
}

Value DenoteExpr(const Dialect& dialect, const Expr& expr,
                 const Valuation& valuation, EffectState* state) {
  std::vector<Value> args;
  args.reserve(expr.args.size());
  for (const Var& v : expr.args) args.push_back(valuation.Lookup(v));

  std::vector<RegionEvaluator> regions;
  std::vector<RegionSig> region_sigs;
  if (!expr.regions.empty()) {
    auto sig = dialect.Signature(expr.op);
    if (!sig || sig->regions.size() != expr.regions.size()) {
      throw IrError("cannot evaluate regions of " + expr.op.name);
    }
    region_sigs = std::move(sig->regions);
    regions.reserve(expr.regions.size());
    for (std::size_t i = 0; i < expr.regions.size(); ++i)
      regions.emplace_back(dialect, expr.regions[i], region_sigs[i].entry,
                           state);
  }

  Value out = dialect.Denote(expr.op, args, regions, state);
  if (!(out.type() == expr.ty)) {
    throw IrError(expr.op.name + " produced a value of type " +
                  DebugString(out.type()) + ", expected " +
                  DebugString(expr.ty));
  }
  return out;
}

Valuation EvalLets(const Dialect& dialect, const std::vector<Expr>& lets,
                   Valuation valuation, EffectState* state) {
  valuation.Reserve(valuation.size() + lets.size());
  for (const Expr& e : lets)
    valuation.PushBack(DenoteExpr(dialect, e, valuation, state));
  return valuation;
}

Value DenoteCom(const Dialect& dialect, const Com& com,
                const Valuation& valuation, EffectState* state) {
  Valuation full = EvalLets(dialect, com.lets, valuation, state);
  return full.Lookup(com.ret);
}

}  // namespace ssair

namespace ssair {

const char* ToString(ElabErrorKind kind) {
  switch (kind) {
    case ElabErrorKind::kUnknownOp: return "unknown-op";
    case ElabErrorKind::kMalformedAttr: return "malformed-attribute";
    case ElabErrorKind::kTerminator: return "terminator";
    case ElabErrorKind::kUnresolvedWidth: return "unresolved-width";
    case ElabErrorKind::kUnknownType: return "unknown-type";
    case ElabErrorKind::kTypeMismatch: return "type-mismatch";
    case ElabErrorKind::kRegionSignature: return "region-signature";
    case ElabErrorKind::kBadValue: return "bad-value";
  }
  return "unknown";
}

}  // namespace ssair
