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

// Structured control flow over a base dialect.
//
//   scf.for(start : int, step : int, niters : nat, seed : t)
//       ({ ^bb0(%i : int, %v : t): ... scf.yield %v2 }) -> t
//   scf.if(cond : bool, v : t) ({ ^bb0(%v : t): ... }, { ... }) -> t
//
// Every other opcode is a base operation and keeps the base's signature
// and meaning. Region bodies only see their block arguments, so values a
// branch or loop body needs are threaded in through `v`.

#ifndef SSAIR_DIALECTS_SCF_H_
#define SSAIR_DIALECTS_SCF_H_

#include <memory>
#include <optional>

#include "ssair/ir/dialect.h"
#include "ssair/rewrite/peephole.h"

namespace ssair {

// The base types scf needs: "int" for counters, "nat" for trip counts
// and "bool" for conditions.
struct ScfBaseTypes {
  Type integer;
  Type natural;
  Type boolean;
};

class ScfDialect final : public Dialect {
 public:
  // Uses ArithDialect as the base.
  ScfDialect();
  ScfDialect(std::shared_ptr<const Dialect> base, ScfBaseTypes types);

  const Dialect& base() const { return *base_; }
  const ScfBaseTypes& types() const { return types_; }

  std::string name() const override { return "scf(" + base_->name() + ")"; }
  std::optional<OpSignature> Signature(const Op& op) const override;
  Value Denote(const Op& op, std::span<const Value> args,
               std::span<const RegionEvaluator> regions,
               EffectState* state) const override;
  std::string TerminatorName(bool in_region) const override {
    return in_region ? "scf.yield" : "return";
  }
  std::optional<Type> ParseType(std::string_view text) const override {
    return base_->ParseType(text);
  }
  std::string PrintType(const Type& t) const override {
    return base_->PrintType(t);
  }
  bool IsValidType(const Type& t) const override {
    return base_->IsValidType(t);
  }
  Op BuildOp(const OpSyntax& syntax) const override;
  std::optional<std::vector<Value>> Enumerate(
      const Type& t, const EnumLimits& limits) const override {
    return base_->Enumerate(t, limits);
  }
  Value RandomValue(const Type& t, Rng& rng) const override {
    return base_->RandomValue(t, rng);
  }
  Value ParseValue(const Type& t, std::string_view text) const override {
    return base_->ParseValue(t, text);
  }
  bool Inhabits(const Type& t, const Value& v) const override {
    return base_->Inhabits(t, v);
  }
  bool Refines(const Value& src, const Value& tgt) const override {
    return base_->Refines(src, tgt);
  }

 private:
  std::shared_ptr<const Dialect> base_;
  ScfBaseTypes types_;
};

Op ScfFor(const Type& carried);
Op ScfIf(const Type& result);

// Iterates (i, v) -> (i + step, body(i, v)) `niters` times from
// (start, seed) and returns the final v. Counters are values of
// `int_type` with an integer payload.
Value ForDenote(const Type& int_type, const BigInt& start, const BigInt& step,
                const BigInt& niters, const Value& seed,
                const RegionEvaluator& body);

// ---- transformations ------------------------------------------------------
//
// Each transformation returns the rewritten program together with the
// number of sites it changed. Replaced bindings are left dead for DCE.
// Constants are recognized through `arith.constant` bindings.

struct ScfTransformResult {
  Com com;
  std::size_t applied = 0;
};

// for(_, _, 0, seed, body) -> seed.
ScfTransformResult DeadLoopElim(const ScfDialect& d, const Ctxt& ctxt,
                                const Com& com);
// if(true, v, a, b) -> a(v); if(false, v, a, b) -> b(v).
ScfTransformResult IfConstFold(const ScfDialect& d, const Ctxt& ctxt,
                               const Com& com);
// for(s, k, n1, seed, b); for(s + n1*k, k, n2, <first result>, b)
//   -> for(s, k, n1 + n2, seed, b)
// Bodies must be structurally equal and start, step and trip counts
// constants.
ScfTransformResult LoopFusion(const ScfDialect& d, const Ctxt& ctxt,
                              const Com& com);
// A loop whose body ignores the induction variable runs backwards:
// start' = start + (niters - 1) * step, step' = -step.
ScfTransformResult LoopReversal(const ScfDialect& d, const Ctxt& ctxt,
                                const Com& com);

// for(start, step, n, seed, {v + delta}) -> seed + n * delta, over !int.
PeepholeRewrite IterAddToMul(const ScfDialect& d, const BigInt& delta);
// for(start, step, 0, seed, body) -> seed, for this particular body over
// carried type body.RetType().
PeepholeRewrite DeadLoopRewrite(const ScfDialect& d, const Com& body);
// if(c, v, then, else) with c a constant -> the chosen branch inlined.
PeepholeRewrite IfConstRewrite(const ScfDialect& d, bool cond,
                               const Com& then_body, const Com& else_body);

}  // namespace ssair

#endif  // SSAIR_DIALECTS_SCF_H_
