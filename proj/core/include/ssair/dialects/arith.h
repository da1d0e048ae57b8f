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

// A small total arithmetic dialect over unbounded integers (!int),
// naturals (!nat) and booleans (!bool). It is the base that scf is
// instantiated with.

#ifndef SSAIR_DIALECTS_ARITH_H_
#define SSAIR_DIALECTS_ARITH_H_

#include <vector>

#include "ssair/ir/dialect.h"
#include "ssair/rewrite/text_rewrite.h"

namespace ssair {

Type ArithInt();
Type ArithNat();
Type ArithBool();

Op ArithConstant(const Type& t, const BigInt& value);
Op ArithBoolConstant(bool value);
// add, mul (int or nat), sub (int), to_int (nat -> int), copy (any).
Op ArithOp(const std::string& name, const Type& t);
// eq ne lt le gt ge
Op ArithCmp(const std::string& predicate, const Type& t);

Value IntVal(const BigInt& v);
Value NatVal(const BigInt& v);
Value BoolVal(bool v);

class ArithDialect : public Dialect {
 public:
  std::string name() const override { return "arith"; }
  std::optional<OpSignature> Signature(const Op& op) const override;
  Value Denote(const Op& op, std::span<const Value> args,
               std::span<const RegionEvaluator> regions,
               EffectState* state) const override;
  std::string TerminatorName(bool) const override { return "return"; }
  std::optional<Type> ParseType(std::string_view text) const override;
  std::string PrintType(const Type& t) const override;
  bool IsValidType(const Type& t) const override;
  Op BuildOp(const OpSyntax& syntax) const override;
  std::optional<std::vector<Value>> Enumerate(
      const Type& t, const EnumLimits& limits) const override;
  // Integers are drawn from [-64, 64], naturals from [0, 16].
  Value RandomValue(const Type& t, Rng& rng) const override;
  Value ParseValue(const Type& t, std::string_view text) const override;
  bool Inhabits(const Type& t, const Value& v) const override;
};

// add_one_sub_one ((x + 1) - 1 -> x), add_zero, add_commute, mul_commute,
// all over !int.
const std::vector<RewriteText>& ArithRewriteTexts();
std::vector<PeepholeRewrite> ArithRewrites(const Dialect& d);

}  // namespace ssair

#endif  // SSAIR_DIALECTS_ARITH_H_
