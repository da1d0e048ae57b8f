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


#include <gtest/gtest.h>

#include <set>

#include "ssair/ir/interpreter.h"
#include "ssair/verify/check.h"
#include "ssair/verify/oracle.h"
#include "ssair/verify/registry.h"
#include "support/test_util.h"

namespace ssair {
namespace {

using testing::Parse;

Value Eval(const std::string& name, unsigned w, std::vector<Value> args,
          const std::string& pred = "") {
  Op op = LlvmOp(name, w, pred);
  Value a = LlvmDenote(op, args);
  EXPECT_EQ(a, OracleDenote(op, args)) << name;
  return a;
}

Value V(unsigned w, long long x) { return IntValue(w, BigInt(x)); }

TEST(BitVec, ConstructionWraps) {
  EXPECT_EQ(BitVec::FromBigInt(8, BigInt(300)), BitVec(8, 44));
  EXPECT_EQ(BitVec::FromBigInt(8, BigInt(-1)), BitVec::AllOnes(8));
  EXPECT_EQ(BitVec::SignedMin(4).ToSigned(), BigInt(-8));
  BitVec big = BitVec::FromBigInt(200, BigInt(1) << 199);
  EXPECT_TRUE(big.IsSignedMin());
  EXPECT_EQ(big.ToUnsigned(), BigInt(1) << 199);
}

// Wide arithmetic against unbounded integers reduced mod 2^w.
TEST(BitVec, WideArithmeticMatchesBigInt) {
  Rng rng(4);
  for (unsigned w : {63u, 64u, 65u, 127u, 200u}) {
    const BigInt mod = BigInt(1) << w;
    auto draw = [&] {
      BigInt v = 0;
      for (int k = 0; k < 4; ++k) v = (v << 64) + BigInt(rng());
      return BigInt(v % mod);
    };
    for (int i = 0; i < 200; ++i) {
      BigInt a = draw(), b = draw();
      BitVec x = BitVec::FromBigInt(w, a), y = BitVec::FromBigInt(w, b);
      EXPECT_EQ(x.Add(y).ToUnsigned(), (a + b) % mod);
      EXPECT_EQ(x.Sub(y).ToUnsigned(), (a - b + mod) % mod);
      EXPECT_EQ(x.Mul(y).ToUnsigned(), (a * b) % mod);
      if (b != 0) {
        EXPECT_EQ(x.UDiv(y).ToUnsigned(), a / b);
        EXPECT_EQ(x.URem(y).ToUnsigned(), a % b);
      }
      unsigned s = static_cast<unsigned>(UniformBelow(rng, w));
      EXPECT_EQ(x.Shl(s).ToUnsigned(), (a << s) % mod);
      EXPECT_EQ(x.LShr(s).ToUnsigned(), a >> s);
    }
  }
}

TEST(Semantics, Examples) {
  EXPECT_EQ(Eval("llvm.add", 2, {V(2, 3), V(2, 2)}), V(2, 1));
  EXPECT_EQ(Eval("llvm.shl", 4, {V(4, 1), V(4, 4)}), PoisonValue(4));
  EXPECT_EQ(Eval("llvm.shl", 4, {V(4, 1), V(4, 3)}), V(4, 8));
  EXPECT_EQ(Eval("llvm.sdiv", 8, {V(8, -128), V(8, -1)}), PoisonValue(8));
  EXPECT_EQ(Eval("llvm.srem", 8, {V(8, -128), V(8, -1)}), PoisonValue(8));
  EXPECT_EQ(Eval("llvm.sdiv", 8, {V(8, -7), V(8, 2)}), V(8, -3));
  EXPECT_EQ(Eval("llvm.srem", 8, {V(8, -7), V(8, 2)}), V(8, -1));
  EXPECT_EQ(Eval("llvm.urem", 4, {V(4, 5), V(4, 0)}), PoisonValue(4));
  EXPECT_EQ(Eval("llvm.udiv", 4, {V(4, 5), V(4, 0)}), PoisonValue(4));
  EXPECT_EQ(Eval("llvm.ashr", 4, {V(4, -8), V(4, 2)}), V(4, -2));
  EXPECT_EQ(Eval("llvm.lshr", 4, {V(4, -8), V(4, 2)}), V(4, 2));
  EXPECT_EQ(Eval("llvm.not", 3, {V(3, 5)}), V(3, 2));
}

TEST(Semantics, IcmpUsesTwosComplement) {
  // 2 is -2 at width 2.
  EXPECT_EQ(Eval("llvm.icmp", 2, {V(2, 2), V(2, 1)}, "slt"), V(1, 1));
  EXPECT_EQ(Eval("llvm.icmp", 2, {V(2, 2), V(2, 1)}, "ult"), V(1, 0));
  EXPECT_EQ(Eval("llvm.icmp", 2, {PoisonValue(2), V(2, 1)}, "eq"), PoisonValue(1));
}

TEST(Semantics, SelectIgnoresTheUnchosenArm) {
  EXPECT_EQ(Eval("llvm.select", 4, {V(1, 1), V(4, 3), PoisonValue(4)}), V(4, 3));
  EXPECT_EQ(Eval("llvm.select", 4, {V(1, 0), PoisonValue(4), V(4, 9)}), V(4, 9));
  EXPECT_EQ(Eval("llvm.select", 4, {PoisonValue(1), V(4, 3), V(4, 3)}), PoisonValue(4));
}

TEST(Semantics, ConstantsTruncate) {
  EXPECT_EQ(LlvmDenote(LlvmConstant(8, BigInt(300)), {}), V(8, 44));
  EXPECT_EQ(LlvmDenote(LlvmConstant(8, BigInt(-1)), {}), V(8, 255));
}

TEST(Semantics, StrictInPoison) {
  for (unsigned w = 1; w <= 3; ++w) {
    for (const std::string& name : LlvmOpNames()) {
      if (name == "llvm.select") continue;
      std::size_t arity = LlvmArity(name);
      std::string pred = name == "llvm.icmp" ? "sle" : "";
      for (std::size_t slot = 0; slot < arity; ++slot) {
        for (std::uint64_t x = 0; x < (1u << w); ++x) {
          std::vector<Value> args(arity, IntValue(w, BigInt(x)));
          args[slot] = PoisonValue(w);
          EXPECT_TRUE(Eval(name, w, args, pred).IsPoison()) << name;
        }
      }
    }
  }
}

TEST(Oracle, ExhaustiveAgreement) {
  for (unsigned w = 1; w <= 4; ++w) {
    OracleReport r = LlvmOracleAgreement(w);
    EXPECT_EQ(r.mismatches, 0u) << r.first_mismatch.value_or("");
    EXPECT_GT(r.checked, 0u);
  }
  OracleReport r = LlvmOracleAgreement(8, true);
  EXPECT_EQ(r.mismatches, 0u);
  EXPECT_EQ(r.checked, 257u);
}

TEST(Refines, Relation) {
  LlvmDialect d;
  EXPECT_TRUE(d.Refines(PoisonValue(4), V(4, 5)));
  EXPECT_TRUE(d.Refines(V(4, 5), V(4, 5)));
  EXPECT_FALSE(d.Refines(V(4, 5), V(4, 6)));
  EXPECT_FALSE(d.Refines(V(4, 5), PoisonValue(4)));
  auto vals = *d.Enumerate(IntType(2), EnumLimits{});
  for (const Value& a : vals) {
    EXPECT_TRUE(d.Refines(a, a));
    for (const Value& b : vals) {
      if (a == b) EXPECT_TRUE(d.Refines(a, b));
      for (const Value& c : vals)
        if (d.Refines(a, b) && d.Refines(b, c)) EXPECT_TRUE(d.Refines(a, c));
    }
  }
}

TEST(Refines, XorOfSelfDifference) {
  LlvmDialect d;
  for (unsigned w = 1; w <= 4; ++w) {
    auto src = Parse(d, R"({
^bb0(%x : i_, %y : i_):
  %a = llvm.sub %x, %x : i_
  %b = llvm.xor %a, %y : i_
  llvm.return %b : i_
})", testing::Width(w));
    Com tgt{{}, Var{1, IntType(w)}};
    CheckSpec spec{&d, src.ctxt, src.com, tgt, CheckMode::kRefine, Exhaustive{}};
    EXPECT_TRUE(Check(spec).passed());
    spec.mode = CheckMode::kExact;
    EXPECT_FALSE(Check(spec).passed());
  }
}

TEST(Elaboration, PrettyAndGenericFormsAgree) {
  LlvmDialect d;
  auto pretty = Parse(d, R"({
^bb0(%a : i8, %b : i8):
  %c = llvm.icmp "ult" %a, %b : i8
  %k = llvm.mlir.constant(7 : i8) : i8
  %s = llvm.select %c, %a, %k : i8
  llvm.return %s : i8
})");
  auto generic = Parse(d, R"({
^bb0(%a : i8, %b : i8):
  %c = "llvm.icmp"(%a, %b) {predicate = "ult"} : (i8, i8) -> i1
  %k = "llvm.mlir.constant"() {value = 7 : i8} : () -> i8
  %s = "llvm.select"(%c, %a, %k) : (i1, i8, i8) -> i8
  "llvm.return"(%s) : (i8) -> ()
})");
  EXPECT_EQ(pretty.com, generic.com);
}

TEST(Corpus, ShipsTheRequiredRewrites) {
  std::set<std::string> names;
  for (const auto& t : LlvmRewriteTexts()) names.insert(t.text.name);
  EXPECT_GE(names.size(), 20u);
  EXPECT_TRUE(names.count("xor_sub_self"));
  EXPECT_TRUE(names.count("and_or_add"));
  LlvmDialect d;
  EXPECT_EQ(LlvmRewrites(d, 1).size(), LlvmRewriteTexts().size());
  EXPECT_EQ(LlvmRewrites(d, 8).size(), LlvmRewriteTexts().size() - 1);
}

TEST(Corpus, EveryRewriteHoldsExhaustivelyAtSmallWidths) {
  LlvmDialect d;
  for (unsigned w = 1; w <= 4; ++w) {
    for (const auto& rw : LlvmRewrites(d, w)) {
      CheckResult r = CheckRewrite(d, rw, Exhaustive{});
      EXPECT_TRUE(r.passed()) << rw.name() << " w=" << w << " "
                              << r.counterexample->ToString();
    }
  }
}

TEST(Corpus, AddIsXorOnlyAtWidthOne) {
  LlvmDialect d;
  const char* src = R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.add %a, %b : i_
  llvm.return %r : i_
})";
  const char* tgt = R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.xor %a, %b : i_
  llvm.return %r : i_
})";
  auto s1 = Parse(d, src, testing::Width(1)), t1 = Parse(d, tgt, testing::Width(1));
  EXPECT_TRUE(Check({&d, s1.ctxt, s1.com, t1.com, CheckMode::kExact, Exhaustive{}}).passed());
  auto s2 = Parse(d, src, testing::Width(2)), t2 = Parse(d, tgt, testing::Width(2));
  CheckSpec spec{&d, s2.ctxt, s2.com, t2.com, CheckMode::kExact, Exhaustive{}};
  CheckResult r = Check(spec);
  ASSERT_FALSE(r.passed());
  // First failing valuation in enumeration order, computed by hand: 1 + 1 = 2
  // but 1 ^ 1 = 0.
  EXPECT_EQ(r.counterexample->valuation, Valuation({V(2, 1), V(2, 1)}));
  EXPECT_EQ(r.counterexample->src_value, V(2, 2));
  EXPECT_EQ(r.counterexample->tgt_value, V(2, 0));
}

}  // namespace
}  // namespace ssair
