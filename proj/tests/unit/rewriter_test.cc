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

#include <functional>

#include "ssair/ir/interpreter.h"
#include "ssair/ir/typecheck.h"
#include "ssair/passes/passes.h"
#include "ssair/rewrite/peephole.h"
#include "ssair/rewrite/text_rewrite.h"
#include "ssair/rewrite/zipper.h"
#include "ssair/syntax/printer.h"
#include "ssair/verify/check.h"
#include "ssair/verify/generate.h"
#include "ssair/verify/registry.h"
#include "support/test_util.h"

namespace ssair {
namespace {

using testing::Parse;

constexpr const char* kIntro = R"({
^bb0(%x : !int):
  %one = arith.constant(1 : !int) : !int
  %y = arith.add %x, %one : !int
  %p = arith.copy %y : !int
  %z = arith.sub %y, %one : !int
  return %z : !int
})";

PeepholeRewrite ArithNamed(const Dialect& d, const std::string& name) {
  for (auto& rw : ArithRewrites(d))
    if (rw.name() == name) return rw;
  throw std::runtime_error("no rewrite " + name);
}

// x2 = x1; x3 = x2; x4 = x3; ret x3
Com CopyChain() {
  const Type I = ArithInt();
  auto copy = [&](std::uint32_t i) {
    return Expr{ArithOp("arith.copy", I), I, {Var{i, I}}, {}};
  };
  return Com{{copy(0), copy(1), copy(2)}, Var{2, I}};
}

TEST(Zipper, SplitAtZeroKeepsEverythingBelow) {
  Com c = CopyChain();
  Zipper z = SplitProgramAt(0, Ctxt{ArithInt()}, c);
  EXPECT_EQ(z.top.size(), 0u);
  EXPECT_EQ(z.bot, c);
}

TEST(Zipper, SplitCopyChainAtTwo) {
  Com c = CopyChain();
  Zipper z = SplitProgramAt(2, Ctxt{ArithInt()}, c);
  EXPECT_EQ(z.top.size(), 2u);
  EXPECT_EQ(z.top.OutCtxt(), (Ctxt{ArithInt(), ArithInt(), ArithInt()}));
  ASSERT_EQ(z.bot.lets.size(), 1u);
  EXPECT_EQ(z.bot.lets[0].args[0].index, 2u);
  EXPECT_EQ(z.bot.ret.index, 2u);
  EXPECT_EQ(Zip(z), c);
}

TEST(Zipper, SplitAtEndLeavesOnlyReturn) {
  Com c = CopyChain();
  Zipper z = SplitProgramAt(3, Ctxt{ArithInt()}, c);
  EXPECT_EQ(z.top.size(), 3u);
  EXPECT_TRUE(z.bot.lets.empty());
  EXPECT_EQ(z.bot.ret, c.ret);
  EXPECT_THROW(SplitProgramAt(4, Ctxt{ArithInt()}, c), IrError);
}

TEST(Zipper, MiddleReturnOnlyIsZip) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  for (std::size_t pos = 0; pos <= p.com.lets.size(); ++pos) {
    Zipper z = SplitProgramAt(pos, p.ctxt, p.com);
    Ctxt delta = z.top.OutCtxt();
    Com mid{{}, Var{0, ArithInt()}};
    Com spliced = ZipWithMiddle(z.top, mid, z.bot, ContextMorphism::Identity(delta));
    ASSERT_TRUE(TypeCheck(d, p.ctxt, spliced).empty());
    for (int x = -5; x <= 5; ++x) {
      Valuation v({IntVal(x)});
      EXPECT_EQ(DenoteCom(d, spliced, v), DenoteCom(d, p.com, v));
    }
  }
}

TEST(Zipper, MiddleIntoEmptyTop) {
  ArithDialect d;
  const Type I = ArithInt();
  Lets top{Ctxt{I}, {}};
  Com mid{{Expr{ArithOp("arith.add", I), I, {Var{0, I}, Var{0, I}}, {}}}, Var{1, I}};
  Com bot{{}, Var{0, I}};
  ContextMorphism retarget(Ctxt{I}, Ctxt{I, I});
  retarget.Set(0, 1);
  Com out = ZipWithMiddle(top, mid, bot, retarget);
  EXPECT_EQ(out.lets.size(), 1u);
  EXPECT_EQ(DenoteCom(d, out, Valuation({IntVal(21)})), IntVal(42));
}

TEST(Zipper, LawsOnRandomPrograms) {
  for (DialectKind kind : {DialectKind::kLlvm, DialectKind::kScf, DialectKind::kPoly}) {
    DialectConfig c;
    c.kind = kind;
    c.width = 4;
    auto inst = MakeDialect(c);
    const Dialect& d = *inst.dialect;
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
      auto g = GenerateProgram(kind, d, GenOptions{}, rng);
      for (std::size_t pos = 0; pos <= g.com.lets.size(); ++pos) {
        Zipper z = SplitProgramAt(pos, g.ctxt, g.com);
        ASSERT_EQ(Zip(z), g.com);
        Valuation v = RandomValuation(d, g.ctxt, rng);
        EXPECT_EQ(DenoteCom(d, z.bot, ExtendValuation(d, z.top, v)),
                  DenoteCom(d, g.com, v));
      }
    }
  }
}

TEST(Match, FreeVariableMatchesAnything) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  Zipper z = SplitProgramAt(4, p.ctxt, p.com);
  Com lhs{{}, Var{0, ArithInt()}};
  for (std::uint32_t root = 0; root < 5; ++root) {
    auto s = MatchAgainst(d, z.top, Var{root, ArithInt()}, Ctxt{ArithInt()}, lhs);
    ASSERT_TRUE(s.has_value());
    EXPECT_EQ((*s)[0], root);
  }
}

TEST(Match, FollowsDefUseChainPastInterleavedBinding) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  PeepholeRewrite rw = ArithNamed(d, "add_one_sub_one");
  Zipper z = SplitProgramAt(4, p.ctxt, p.com);
  auto s = MatchAgainst(d, z.top, Var{4, ArithInt()}, rw.free_ctxt(), rw.lhs());
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ((*s)[0], 0u);
}

TEST(Match, RepeatedFreeVariableMustBindConsistently) {
  LlvmDialect d;
  auto rw = InstantiateRewrite(d, {"sub_self", R"({
^bb0(%a : i_):
  %r = llvm.sub %a, %a : i_
  llvm.return %r : i_
})", R"({
^bb0(%a : i_):
  %r = llvm.mlir.constant(0 : i_) : i_
  llvm.return %r : i_
})"}, testing::Width(4));
  auto p = Parse(d, R"({
^bb0(%p : i4, %q : i4):
  %r = llvm.sub %p, %q : i4
  %s = llvm.sub %p, %p : i4
  llvm.return %r : i4
})");
  Zipper z = SplitProgramAt(2, p.ctxt, p.com);
  EXPECT_FALSE(MatchAgainst(d, z.top, Var{2, IntType(4)}, rw.free_ctxt(), rw.lhs()));
  EXPECT_TRUE(MatchAgainst(d, z.top, Var{3, IntType(4)}, rw.free_ctxt(), rw.lhs()));
}

TEST(Match, ConstantsMustBeIdentical) {
  ArithDialect d;
  auto p = Parse(d, R"({
^bb0(%x : !int):
  %two = arith.constant(2 : !int) : !int
  %y = arith.add %x, %two : !int
  return %y : !int
})");
  PeepholeRewrite rw = ArithNamed(d, "add_zero");
  EXPECT_FALSE(TryRewritePeepholeAt(d, rw, 1, p.ctxt, p.com));
}

// ---- brute-force matcher oracle -------------------------------------------

// Tries every assignment of lhs free variables to type-equal target
// variables and checks the instantiated tree against the target directly.
bool BruteForceMatches(const Lets& top, const Var& root, const Ctxt& free_ctxt,
                       const Com& lhs) {
  const Ctxt target_ctxt = top.OutCtxt();
  const std::size_t g = top.gamma.size();
  const std::size_t nfree = free_ctxt.size();
  std::vector<std::vector<std::uint32_t>> candidates(nfree);
  for (std::size_t i = 0; i < nfree; ++i)
    for (std::uint32_t t = 0; t < target_ctxt.size(); ++t)
      if (target_ctxt[t] == free_ctxt[i]) candidates[i].push_back(t);
  std::vector<std::uint32_t> sigma(nfree);
  std::function<bool(std::uint32_t, std::uint32_t)> same =
      [&](std::uint32_t pat, std::uint32_t tgt) -> bool {
    if (pat < nfree) return sigma[pat] == tgt;
    if (tgt < g) return false;
    const Expr& pe = lhs.lets[pat - nfree];
    const Expr& te = top.bindings[tgt - g];
    if (!(pe.op == te.op) || !(pe.ty == te.ty) ||
        pe.args.size() != te.args.size() || !(pe.regions == te.regions)) {
      return false;
    }
    for (std::size_t k = 0; k < pe.args.size(); ++k)
      if (!same(pe.args[k].index, te.args[k].index)) return false;
    return true;
  };
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == nfree) return same(lhs.ret.index, root.index);
    for (std::uint32_t t : candidates[i]) {
      sigma[i] = t;
      if (search(i + 1)) return true;
    }
    return false;
  };
  if (!(lhs.RetType() == root.ty)) return false;
  return search(0);
}

TEST(Match, AgreesWithBruteForceOnSmallPrograms) {
  LlvmDialect d;
  auto rws = LlvmRewrites(d, 2);
  Rng rng(5);
  GenOptions opts;
  opts.max_bindings = 3;
  opts.width = 2;
  opts.plant_rate = 0.5;
  std::size_t matches = 0, total = 0;
  for (int i = 0; i < 300; ++i) {
    auto g = GenerateProgram(DialectKind::kLlvm, d, opts, rng, rws);
    for (std::size_t pos = 0; pos < g.com.lets.size(); ++pos) {
      Zipper z = SplitProgramAt(pos + 1, g.ctxt, g.com);
      Var root{static_cast<std::uint32_t>(g.ctxt.size() + pos), g.com.lets[pos].ty};
      for (const auto& rw : rws) {
        bool expect = BruteForceMatches(z.top, root, rw.free_ctxt(), rw.lhs());
        bool got = MatchAgainst(d, z.top, root, rw.free_ctxt(), rw.lhs()).has_value();
        ASSERT_EQ(got, expect) << rw.name() << " at " << pos << "\n"
                               << syntax::Print(d, g.ctxt, g.com);
        matches += got;
        ++total;
      }
    }
  }
  EXPECT_GT(matches, 50u);
  EXPECT_GT(total, matches);
}

TEST(Match, SubstitutionIsSound) {
  LlvmDialect d;
  auto rws = LlvmRewrites(d, 3);
  Rng rng(6);
  GenOptions opts;
  opts.width = 3;
  opts.plant_rate = 0.3;
  std::size_t checked = 0;
  for (int i = 0; i < 100; ++i) {
    auto g = GenerateProgram(DialectKind::kLlvm, d, opts, rng, rws);
    for (std::size_t pos = 0; pos < g.com.lets.size(); ++pos) {
      Zipper z = SplitProgramAt(pos + 1, g.ctxt, g.com);
      Var root{static_cast<std::uint32_t>(g.ctxt.size() + pos), g.com.lets[pos].ty};
      for (const auto& rw : rws) {
        auto s = MatchAgainst(d, z.top, root, rw.free_ctxt(), rw.lhs());
        if (!s) continue;
        for (int j = 0; j < 10; ++j) {
          Valuation v = RandomValuation(d, g.ctxt, rng);
          Valuation full = ExtendValuation(d, z.top, v);
          Valuation lhs_env;
          for (std::size_t k = 0; k < rw.free_ctxt().size(); ++k) {
            lhs_env.PushBack((*s)[k] ? full[*(*s)[k]]
                                     : d.RandomValue(rw.free_ctxt()[k], rng));
          }
          ASSERT_EQ(DenoteCom(d, rw.lhs(), lhs_env), full[root.index]) << rw.name();
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 100u);
}

// ---- rewriting ------------------------------------------------------------

TEST(RewriteAt, IntroProgram) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  PeepholeRewrite rw = ArithNamed(d, "add_one_sub_one");
  auto out = TryRewritePeepholeAt(d, rw, 3, p.ctxt, p.com);
  ASSERT_TRUE(out.has_value());
  EXPECT_TRUE(TypeCheck(d, p.ctxt, *out).empty());
  // The old bindings stay; the return now reads x.
  EXPECT_EQ(out->lets.size(), 4u);
  EXPECT_EQ(out->ret.index, 0u);
  for (int x = -20; x <= 20; ++x) {
    Valuation v({IntVal(x)});
    EXPECT_EQ(DenoteCom(d, *out, v), DenoteCom(d, p.com, v));
  }
  auto clean = Dce(d, p.ctxt, *out);
  EXPECT_TRUE(clean.com.lets.empty());
}

TEST(RewriteAt, NonMatchingLeavesProgramUnchanged) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  PeepholeRewrite rw = ArithNamed(d, "mul_commute");
  for (std::size_t pos = 0; pos < p.com.lets.size(); ++pos) {
    EXPECT_EQ(RewritePeepholeAt(d, rw, pos, p.ctxt, p.com), p.com);
    EXPECT_FALSE(TryRewritePeepholeAt(d, rw, pos, p.ctxt, p.com));
  }
}

TEST(RewriteAt, WrongReturnTypeIsUnchanged) {
  LlvmDialect d;
  auto rws = LlvmRewrites(d, 4);
  auto p = Parse(d, R"({
^bb0(%x : i8, %y : i8):
  %a = llvm.sub %x, %x : i8
  %b = llvm.xor %a, %y : i8
  llvm.return %b : i8
})");
  for (const auto& rw : rws)
    for (std::size_t pos = 0; pos < 2; ++pos)
      EXPECT_EQ(RewritePeepholeAt(d, rw, pos, p.ctxt, p.com), p.com) << rw.name();
}

TEST(RewritePeephole, ZeroFuelIsIdentity) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  RewriteStats stats;
  EXPECT_EQ(RewritePeephole(d, 0, ArithNamed(d, "add_one_sub_one"), p.ctxt, p.com,
                            &stats),
            p.com);
  EXPECT_EQ(stats.applied, 0u);
}

TEST(RewritePeephole, RewritesBothDisjointOccurrences) {
  ArithDialect d;
  auto p = Parse(d, R"({
^bb0(%x : !int, %y : !int):
  %zero = arith.constant(0 : !int) : !int
  %a = arith.add %x, %zero : !int
  %b = arith.add %y, %zero : !int
  %c = arith.mul %a, %b : !int
  return %c : !int
})");
  PeepholeRewrite rw = ArithNamed(d, "add_zero");
  std::size_t sites = 0;
  for (std::size_t pos = 0; pos < p.com.lets.size(); ++pos)
    sites += TryRewritePeepholeAt(d, rw, pos, p.ctxt, p.com).has_value();
  ASSERT_EQ(sites, 2u);
  RewriteStats stats;
  Com out = RewritePeephole(d, 3, rw, p.ctxt, p.com, &stats);
  EXPECT_EQ(stats.applied, sites);
  auto clean = Dce(d, p.ctxt, out);
  ASSERT_EQ(clean.com.lets.size(), 1u);
  EXPECT_EQ(clean.com.lets[0].args, (std::vector<Var>{{0, ArithInt()}, {1, ArithInt()}}));
}

TEST(RewritePeephole, FuelBoundsApplications) {
  ArithDialect d;
  auto p = Parse(d, kIntro);
  // Commutation always matches again, so only fuel stops it.
  RewriteStats stats;
  Com out = RewritePeephole(d, 5, ArithNamed(d, "add_commute"), p.ctxt, p.com, &stats);
  EXPECT_EQ(stats.applied, 5u);
  EXPECT_TRUE(TypeCheck(d, p.ctxt, out).empty());
  EXPECT_EQ(DenoteCom(d, out, Valuation({IntVal(3)})), IntVal(3));
}

TEST(RewritePeephole, RewritesInsideRegions) {
  ScfDialect d;
  auto p = Parse(d, R"({
^bb0(%s : !int, %n : !nat, %seed : !int):
  %r = scf.for(%s, %s, %n, %seed) ({
  ^bb0(%i : !int, %v : !int):
    %zero = arith.constant(0 : !int) : !int
    %w = arith.add %v, %zero : !int
    %u = arith.add %w, %i : !int
    scf.yield %u : !int
  }) : !int
  return %r : !int
})");
  PeepholeRewrite rw = ArithNamed(d, "add_zero");
  RewriteStats stats;
  Com out = RewritePeephole(d, 10, rw, p.ctxt, p.com, &stats);
  EXPECT_EQ(stats.applied, 1u);
  EXPECT_NE(out, p.com);
  EXPECT_EQ(out.lets[0].regions[0].lets[2].args[0].index, 1u);
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    Valuation v = RandomValuation(d, p.ctxt, rng);
    EXPECT_EQ(DenoteCom(d, out, v), DenoteCom(d, p.com, v));
  }
}

TEST(PeepholeRewrite, RejectsIllFormedPairs) {
  ArithDialect d;
  const Type I = ArithInt();
  Com lhs{{}, Var{0, I}};
  // rhs reads b, which the lhs never reaches.
  Com rhs{{}, Var{1, I}};
  EXPECT_THROW(PeepholeRewrite::Make(d, "bad", Ctxt{I, I}, lhs, rhs, CheckMode::kExact),
               IrError);
  Com boolean{{Expr{ArithBoolConstant(true), ArithBool(), {}, {}}}, Var{2, ArithBool()}};
  EXPECT_THROW(
      PeepholeRewrite::Make(d, "bad", Ctxt{I, I}, lhs, boolean, CheckMode::kExact),
      IrError);
}

class Preservation : public ::testing::TestWithParam<DialectKind> {};

TEST_P(Preservation, RegistryRewritesPreserveDenotation) {
  DialectConfig c;
  c.kind = GetParam();
  c.width = 3;
  auto inst = MakeDialect(c);
  const Dialect& d = *inst.dialect;
  auto rws = DefaultRegistry().All(c, d);
  ASSERT_FALSE(rws.empty());
  GenOptions opts;
  opts.width = 3;
  opts.plant_rate = 0.3;
  Rng rng(21);
  std::size_t applied = 0;
  for (int i = 0; i < 40; ++i) {
    auto g = GenerateProgram(c.kind, d, opts, rng, rws);
    for (const auto& rw : rws) {
      RewriteStats stats;
      Com out = RewritePeephole(d, 20, rw, g.ctxt, g.com, &stats);
      applied += stats.applied;
      ASSERT_TRUE(TypeCheck(d, g.ctxt, out).empty()) << rw.name();
      CheckSpec spec{&d, g.ctxt, g.com, out, rw.mode(), Random{20, 7}};
      auto r = Check(spec);
      ASSERT_TRUE(r.passed()) << rw.name() << " " << r.counterexample->ToString();
    }
  }
  EXPECT_GT(applied, 20u);
}

INSTANTIATE_TEST_SUITE_P(AllDialects, Preservation,
                         ::testing::Values(DialectKind::kLlvm, DialectKind::kArith,
                                           DialectKind::kScf, DialectKind::kPoly),
                         [](const auto& info) { return std::string(ToString(info.param)); });

}  // namespace
}  // namespace ssair
