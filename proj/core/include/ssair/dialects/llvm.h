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

// Integer fragment of LLVM IR over arbitrary-width bitvectors with poison.
// Undefined behavior (division by zero, signed overflow in sdiv/srem) is
// folded into poison.

#ifndef SSAIR_DIALECTS_LLVM_H_
#define SSAIR_DIALECTS_LLVM_H_

#include <span>
#include <string>
#include <vector>

#include "ssair/ir/dialect.h"
#include "ssair/rewrite/text_rewrite.h"

namespace ssair {

inline constexpr unsigned kLlvmMaxWidth = 1u << 16;

Type IntType(unsigned width);  // i<width>

// The sixteen arithmetic instructions, in a fixed order:
// not and or xor shl lshr ashr urem srem add mul sub sdiv udiv select icmp.
const std::vector<std::string>& LlvmOpNames();
// Number of operands of one of the names above.
std::size_t LlvmArity(const std::string& op_name);
const std::vector<std::string>& IcmpPredicates();

// Builds an opcode at width `w`. `predicate` is used by icmp, `value` by
// llvm.mlir.constant.
Op LlvmOp(const std::string& name, unsigned width,
          const std::string& predicate = "");
Op LlvmConstant(unsigned width, const BigInt& value);

Value PoisonValue(unsigned width);
Value IntValue(unsigned width, const BigInt& v);

class LlvmDialect final : public Dialect {
 public:
  std::string name() const override { return "llvm"; }
  std::optional<OpSignature> Signature(const Op& op) const override;
  Value Denote(const Op& op, std::span<const Value> args,
               std::span<const RegionEvaluator> regions,
               EffectState* state) const override;
  std::string TerminatorName(bool) const override { return "llvm.return"; }
  std::optional<Type> ParseType(std::string_view text) const override;
  std::string PrintType(const Type& t) const override;
  bool IsValidType(const Type& t) const override;
  Op BuildOp(const OpSyntax& syntax) const override;
  std::optional<std::vector<Value>> Enumerate(
      const Type& t, const EnumLimits& limits) const override;
  Value RandomValue(const Type& t, Rng& rng) const override;
  Value ParseValue(const Type& t, std::string_view text) const override;
  bool Inhabits(const Type& t, const Value& v) const override;
  // src is poison, or tgt equals src.
  bool Refines(const Value& src, const Value& tgt) const override;
};

// The bit-level semantics, usable without a Dialect object.
Value LlvmDenote(const Op& op, std::span<const Value> args);

// Independent reference semantics written over unbounded integers from
// the instruction descriptions. Used only to cross-check LlvmDenote.
Value OracleDenote(const Op& op, std::span<const Value> args);

// The shipped rewrite corpus, written over the width placeholder `i_`.
// only_width != 0 restricts a rewrite to that single width.
struct LlvmRewriteText {
  RewriteText text;
  unsigned only_width = 0;
};

const std::vector<LlvmRewriteText>& LlvmRewriteTexts();
// The rewrites valid at `width`, elaborated there.
std::vector<PeepholeRewrite> LlvmRewrites(const LlvmDialect& d, unsigned width);

}  // namespace ssair

#endif  // SSAIR_DIALECTS_LLVM_H_
