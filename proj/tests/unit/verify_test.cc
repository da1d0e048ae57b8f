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

#include "ssair/verify/check.h"
#include "ssair/verify/lint.h"
#include "ssair/verify/registry.h"
#include "support/test_util.h"

namespace ssair {
namespace {

using testing::Parse;

PeepholeRewrite LlvmRewrite(const std::string& lhs, const std::string& rhs, unsigned w,
                            CheckMode mode = CheckMode::kExact) {
  static LlvmDialect d;
  return InstantiateRewrite(d, {"test", lhs, rhs, mode}, testing::Width(w));
}

TEST(Enumerate, TwoSmallBitvectors) {
  LlvmDialect d;
  Ctxt ctxt{IntType(2), IntType(2)};
  auto all = EnumerateValuations(d, ctxt, Exhaustive{});
  EXPECT_EQ(all.size(), 25u);
  EXPECT_EQ(CountValuations(d, ctxt, Exhaustive{}), 25u);
  std::set<std::string> distinct;
  for (const auto& v : all) distinct.insert(v.ToString());
  EXPECT_EQ(distinct.size(), 25u);
  // Slot 0 varies slowest; poison comes first.
  EXPECT_TRUE(all[0][0].IsPoison() && all[0][1].IsPoison());
  EXPECT_TRUE(all[1][0].IsPoison());
  EXPECT_EQ(all[5][0], IntValue(2, 0));
  EXPECT_EQ(EnumerateValuations(d, ctxt, Exhaustive{}), all);
}

TEST(Enumerate, EmptyContextHasOneValuation) {
  LlvmDialect d;
  auto all = EnumerateValuations(d, Ctxt{}, Exhaustive{});
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].size(), 0u);
}

TEST(Enumerate, SmallRing) {
  PolyDialect d({7, 1});
  EXPECT_EQ(EnumerateValuations(d, Ctxt{RingType()}, Exhaustive{}).size(), 49u);
}

TEST(Enumerate, StopsEarly) {
  LlvmDialect d;
  std::size_t seen = 0;
  ForEachValuation(d, Ctxt{IntType(4)}, Exhaustive{}, [&](const Valuation&) {
    return ++seen < 3;
  });
  EXPECT_EQ(seen, 3u);
}

TEST(Enumerate, InfeasibleInputs) {
  LlvmDialect d;
  EXPECT_THROW(EnumerateValuations(d, Ctxt{IntType(16)}, Exhaustive{}), InfeasibleStrategy);
  Exhaustive tight;
  tight.max_valuations = 100;
  EXPECT_THROW(EnumerateValuations(d, Ctxt{IntType(4), IntType(4)}, tight),
               InfeasibleStrategy);
  ArithDialect a;
  EXPECT_THROW(EnumerateValuations(a, Ctxt{ArithInt()}, Exhaustive{}), InfeasibleStrategy);
  EXPECT_EQ(EnumerateValuations(a, Ctxt{ArithBool()}, Exhaustive{}).size(), 2u);
}

TEST(RandomValuation, InhabitsTheContext) {
  Rng rng(2);
  PolyDialect d({3329, 4});
  Ctxt ctxt{RingType(), IndexType(), TensorType(16)};
  for (int i = 0; i < 100; ++i) EXPECT_TRUE(RandomValuation(d, ctxt, rng).Inhabits(ctxt));
}

TEST(Check, ReflexiveUnderEveryStrategy) {
  LlvmDialect d;
  auto p = Parse(d, R"({
^bb0(%a : i3, %b : i3):
  %c = llvm.udiv %a, %b : i3
  llvm.return %c : i3
})");
  for (Strategy s : {Strategy(Exhaustive{}), Strategy(Random{200, 5})}) {
    for (CheckMode m : {CheckMode::kExact, CheckMode::kRefine}) {
      CheckResult r = Check({&d, p.ctxt, p.com, p.com, m, s});
      EXPECT_TRUE(r.passed());
    }
  }
  EXPECT_EQ(Check({&d, p.ctxt, p.com, p.com, CheckMode::kExact, Exhaustive{}}).visited, 81u);
}

TEST(Check, RejectsMismatchedPrograms) {
  LlvmDialect d;
  auto p = Parse(d, R"({
^bb0(%a : i3, %b : i3):
  %c = llvm.icmp "eq" %a, %b : i3
  llvm.return %c : i1
})");
  Com other{{}, Var{0, IntType(3)}};
  EXPECT_THROW(Check({&d, p.ctxt, p.com, other, CheckMode::kExact, Exhaustive{}}), IrError);
}

TEST(Check, CounterexamplesReplayAndAreDeterministic) {
  LlvmDialect d;
  auto src = Parse(d, R"({
^bb0(%a : i8, %b : i8):
  %c = llvm.or %a, %b : i8
  llvm.return %c : i8
})");
  auto tgt = Parse(d, R"({
^bb0(%a : i8, %b : i8):
  %c = llvm.add %a, %b : i8
  llvm.return %c : i8
})");
  CheckSpec spec{&d, src.ctxt, src.com, tgt.com, CheckMode::kExact, Random{500, 17}};
  CheckResult r1 = Check(spec), r2 = Check(spec);
  ASSERT_FALSE(r1.passed());
  EXPECT_EQ(r1.counterexample->valuation, r2.counterexample->valuation);
  EXPECT_EQ(r1.counterexample->index, r2.counterexample->index);
  EXPECT_EQ(r1.visited, r2.visited);
  EXPECT_TRUE(Replay(spec, *r1.counterexample));
  Counterexample forged = *r1.counterexample;
  forged.tgt_value = forged.src_value;
  EXPECT_FALSE(Replay(spec, forged));
  EXPECT_EQ(r1.counterexample->ToString().rfind("inputs=(%0 = ", 0), 0u);
}

TEST(Check, RefineAcceptsPoisonSourceOnly) {
  LlvmDialect d;
  auto rw = LlvmRewrite(R"({
^bb0(%x : i_, %y : i_):
  %a = llvm.udiv %x, %y : i_
  llvm.return %a : i_
})", R"({
^bb0(%x : i_, %y : i_):
  llvm.return %x : i_
})", 2, CheckMode::kRefine);
  CheckResult r = CheckRewrite(d, rw, Exhaustive{});
  ASSERT_FALSE(r.passed());
  EXPECT_FALSE(r.counterexample->src_value.IsPoison());
}

TEST(Lint, NoDivisionPasses) {
  auto rw = LlvmRewrite(R"({
^bb0(%x : i_):
  %a = llvm.add %x, %x : i_
  llvm.return %a : i_
})", R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(2 : i_) : i_
  %a = llvm.mul %x, %c : i_
  llvm.return %a : i_
})", 4);
  EXPECT_TRUE(LintDivRemPairing(rw).empty());
}

TEST(Lint, MatchingDivisionPasses) {
  auto rw = LlvmRewrite(R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.udiv %a, %b : i_
  %r = llvm.add %q, %q : i_
  llvm.return %r : i_
})", R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.udiv %a, %b : i_
  %c = llvm.mlir.constant(2 : i_) : i_
  %r = llvm.mul %q, %c : i_
  llvm.return %r : i_
})", 4);
  EXPECT_TRUE(LintDivRemPairing(rw).empty());
}

TEST(Lint, FreshOrReorderedDivisionWarns) {
  auto fresh = LlvmRewrite(R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.sub %a, %a : i_
  llvm.return %r : i_
})", R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.sdiv %a, %a : i_
  %r = llvm.sub %q, %q : i_
  llvm.return %r : i_
})", 4);
  EXPECT_EQ(LintDivRemPairing(fresh).size(), 1u);
  auto swapped = LlvmRewrite(R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.urem %a, %b : i_
  llvm.return %q : i_
})", R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.urem %b, %a : i_
  llvm.return %q : i_
})", 4);
  EXPECT_EQ(LintDivRemPairing(swapped).size(), 1u);
  EXPECT_TRUE(IsDivRem("llvm.srem"));
  EXPECT_FALSE(IsDivRem("llvm.shl"));
}

RegistryEntry TextEntry(const std::string& name, const std::string& lhs,
                        const std::string& rhs, CheckMode mode) {
  RegistryEntry e;
  e.name = name;
  e.kind = DialectKind::kLlvm;
  e.make = [=](const DialectConfig&, const Dialect& d) {
    return InstantiateRewrite(d, {name, lhs, rhs, mode}, ElabParams{});
  };
  DialectConfig c;
  c.width = 2;
  e.plan.push_back({c, Exhaustive{}});
  return e;
}

TEST(Registry, RefusesRewritesThatFailTheirPlan) {
  RewriteRegistry reg;
  reg.Add(TextEntry("add_is_xor", R"({
^bb0(%a : i2, %b : i2):
  %r = llvm.add %a, %b : i2
  llvm.return %r : i2
})", R"({
^bb0(%a : i2, %b : i2):
  %r = llvm.xor %a, %b : i2
  llvm.return %r : i2
})", CheckMode::kExact));
  auto verdicts = reg.Verify(DialectKind::kLlvm, "add_is_xor");
  ASSERT_EQ(verdicts.size(), 1u);
  EXPECT_FALSE(verdicts[0].passed);
  EXPECT_EQ(verdicts[0].ToString().rfind("FAIL add_is_xor exhaustive", 0), 0u)
      << verdicts[0].ToString();
  EXPECT_NE(verdicts[0].ToString().find("w=2"), std::string::npos);
  EXPECT_FALSE(reg.Verified(DialectKind::kLlvm, "add_is_xor"));
  LlvmDialect d;
  DialectConfig c;
  c.width = 2;
  EXPECT_THROW(reg.Get(c, d, "add_is_xor"), IrError);
  EXPECT_THROW(reg.All(c, d), IrError);
  EXPECT_THROW(reg.Add(TextEntry("add_is_xor", "", "", CheckMode::kExact)), IrError);
}

TEST(Registry, LintFailureIsAFail) {
  RewriteRegistry reg;
  // Holds under refinement, but the rhs divides where the lhs never did.
  reg.Add(TextEntry("fresh_udiv", R"({
^bb0(%a : i2):
  %z = llvm.mlir.constant(0 : i2) : i2
  %r = llvm.udiv %a, %z : i2
  llvm.return %r : i2
})", R"({
^bb0(%a : i2):
  %z = llvm.mlir.constant(0 : i2) : i2
  %r = llvm.udiv %z, %z : i2
  llvm.return %r : i2
})", CheckMode::kRefine));
  auto v = reg.Verify(DialectKind::kLlvm, "fresh_udiv");
  ASSERT_EQ(v.size(), 1u);
  EXPECT_FALSE(v[0].passed);
  EXPECT_FALSE(v[0].counterexample.has_value());
  EXPECT_FALSE(v[0].note.empty());
}

TEST(Registry, EmptyPlanIsNotVerified) {
  RewriteRegistry reg;
  RegistryEntry e = TextEntry("unplanned", "", "", CheckMode::kExact);
  e.plan.clear();
  reg.Add(e);
  EXPECT_FALSE(reg.Verified(DialectKind::kLlvm, "unplanned"));
}

TEST(Registry, DefaultRegistryAllPass) {
  const auto& reg = DefaultRegistry();
  for (DialectKind k : {DialectKind::kLlvm, DialectKind::kArith, DialectKind::kScf,
                        DialectKind::kPoly}) {
    auto names = reg.Names(k);
    EXPECT_FALSE(names.empty());
    for (const auto& n : names) {
      for (const Verdict& v : reg.Verify(k, n)) EXPECT_TRUE(v.passed) << v.ToString();
      EXPECT_TRUE(reg.Verified(k, n));
    }
  }
  LlvmDialect d;
  DialectConfig w2;
  w2.width = 2;
  EXPECT_THROW(reg.Get(w2, d, "add_to_xor_i1"), IrError);
  EXPECT_THROW(reg.Get(w2, d, "no_such_rewrite"), IrError);
  DialectConfig w1;
  w1.width = 1;
  EXPECT_EQ(reg.Get(w1, d, "add_to_xor_i1").name(), "add_to_xor_i1");
  EXPECT_EQ(reg.All(w1, d).size(), reg.All(w2, d).size() + 1);
}

TEST(Registry, LlvmPlanCoversSmallWidthsAndWidth64) {
  const auto& reg = DefaultRegistry();
  auto v = reg.Verify(DialectKind::kLlvm, "xor_sub_self");
  std::set<std::string> params;
  for (const auto& x : v) params.insert(x.params + " " + x.strategy.substr(0, 6));
  EXPECT_TRUE(params.count("w=1 exhaus"));
  EXPECT_TRUE(params.count("w=4 exhaus"));
  EXPECT_TRUE(params.count("w=64 random"));
  for (const auto& x : v)
    if (x.params == "w=64") EXPECT_GE(x.visited, 1000u);
}

}  // namespace
}  // namespace ssair
