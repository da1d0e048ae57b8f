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

#include "ssair/ir/typecheck.h"
#include "ssair/syntax/ast.h"
#include "ssair/syntax/elaborate.h"
#include "ssair/syntax/printer.h"
#include "support/test_util.h"

namespace ssair {
namespace {

using syntax::ElaborationError;
using syntax::ParseError;
using testing::Parse;

syntax::SourceLoc ParseErrorAt(std::string_view text) {
  try {
    syntax::Parse(text);
  } catch (const ParseError& e) {
    return e.loc();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return {};
}

ElabErrorKind ElabErrorOf(const Dialect& d, std::string_view text,
                          const ElabParams& params = {}) {
  try {
    syntax::ParseProgram(d, text, params);
  } catch (const ElaborationError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no elaboration error for:\n" << text;
  return ElabErrorKind::kBadValue;
}

TEST(Parse, SingleTerminator) {
  auto ast = syntax::Parse(R"({ ^bb0(%a : !R): "return"(%a) : (!R) -> () })");
  ASSERT_EQ(ast.body.args.size(), 1u);
  EXPECT_EQ(ast.body.args[0].type, "!R");
  ASSERT_EQ(ast.body.ops.size(), 1u);
  EXPECT_EQ(ast.body.ops[0].name, "return");
}

TEST(Parse, GeneratorRewriteSides) {
  const RewriteText* gen = nullptr;
  for (const auto& t : PolyRewriteTexts())
    if (t.name == "add_generator") gen = &t;
  ASSERT_NE(gen, nullptr);
  EXPECT_EQ(syntax::Parse(gen->lhs).body.ops.size(), 7u);
  EXPECT_EQ(syntax::Parse(gen->rhs).body.ops.size(), 1u);
}

TEST(Parse, BareBlockAndComments) {
  auto ast = syntax::Parse(R"(// leading comment
^bb0(%x : i8):  // trailing
  llvm.return %x : i8
)");
  EXPECT_EQ(ast.body.ops.size(), 1u);
}

TEST(Parse, ErrorsCarryPositions) {
  auto loc = ParseErrorAt("{\n^bb0(%a : i8):\n  llvm.return %a : i8\n");
  EXPECT_EQ(loc.line, 4);
  loc = ParseErrorAt("{\n^bb0(%a : i8):\n  %b = llvm.add %a, %c : i8\n  llvm.return %b : i8\n}");
  EXPECT_EQ(loc.line, 3);
  EXPECT_EQ(loc.col, 21);
  loc = ParseErrorAt("{\n^bb0(%a : i8, %a : i8):\n  llvm.return %a : i8\n}");
  EXPECT_EQ(loc.line, 2);
  loc = ParseErrorAt("{ ^bb0(%a : i8): llvm.return %a : i8 $ }");
  EXPECT_EQ(loc.line, 1);
  EXPECT_EQ(loc.col, 38);
}

TEST(Parse, ErrorMessageNamesLineAndColumn) {
  try {
    syntax::Parse("{\n^bb0(%a : i8):\n  %b = llvm.add %a, %zz : i8\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("3:21: ", 0), 0u) << e.what();
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(Parse, RegionsCannotReadOuterNames) {
  ParseErrorAt(R"({
^bb0(%c : !bool, %x : !int):
  %r = scf.if(%c, %x) ({
  ^bb0(%a : !int):
    scf.yield %x : !int
  }, {
  ^bb0(%a : !int):
    scf.yield %a : !int
  }) : !int
  return %r : !int
})");
}

TEST(Elaborate, WidthPlaceholder) {
  LlvmDialect d;
  std::string text;
  for (const auto& t : LlvmRewriteTexts())
    if (t.text.name == "xor_sub_self") text = t.text.lhs;
  ASSERT_FALSE(text.empty());
  auto p = syntax::ParseProgram(d, text, testing::Width(8));
  EXPECT_EQ(p.com.lets.size(), 2u);
  for (const Type& t : p.ctxt) EXPECT_EQ(t, IntType(8));
  EXPECT_TRUE(TypeCheck(d, p.ctxt, p.com).empty());
  EXPECT_EQ(ElabErrorOf(d, text), ElabErrorKind::kUnresolvedWidth);
}

TEST(Elaborate, DistinctErrorKinds) {
  LlvmDialect d;
  ArithDialect a;
  ScfDialect s;
  EXPECT_EQ(ElabErrorOf(d, "{^bb0(%a : i8): %b = llvm.frob %a : i8\n llvm.return %b : i8}"),
            ElabErrorKind::kUnknownOp);
  EXPECT_EQ(ElabErrorOf(d, "{^bb0(%a : i8): %b = llvm.icmp \"sometimes\" %a, %a : i8\n"
                           " llvm.return %b : i1}"),
            ElabErrorKind::kMalformedAttr);
  EXPECT_EQ(ElabErrorOf(d, "{^bb0(%a : i8): %b = llvm.add %a, %a : i8}"),
            ElabErrorKind::kTerminator);
  EXPECT_EQ(ElabErrorOf(d, "{^bb0(%a : i8): llvm.return %a : i8\n"
                           " %b = llvm.add %a, %a : i8}"),
            ElabErrorKind::kTerminator);
  EXPECT_EQ(ElabErrorOf(d, "{^bb0(%a : !R): llvm.return %a : !R}"),
            ElabErrorKind::kUnknownType);
  EXPECT_EQ(ElabErrorOf(a, "{^bb0(%a : !int, %b : !bool):\n"
                           " %c = \"arith.add\"(%a, %b) : (!int, !bool) -> !int\n"
                           " return %c : !int}"),
            ElabErrorKind::kTypeMismatch);
  EXPECT_EQ(ElabErrorOf(s, R"({
^bb0(%s : !int, %n : !nat, %x : !int):
  %r = scf.for(%s, %s, %n, %x) ({
  ^bb0(%v : !int):
    scf.yield %v : !int
  }) : !int
  return %r : !int
})"),
            ElabErrorKind::kRegionSignature);
}

TEST(Elaborate, StrictnessFlagsAreRejected) {
  LlvmDialect d;
  EXPECT_THROW(syntax::ParseProgram(
                   d,
                   "{^bb0(%a : i8): %b = \"llvm.add\"(%a, %a) {overflowFlags = \"nsw\"}"
                   " : (i8, i8) -> i8\n llvm.return %b : i8}",
                   {}),
               ElaborationError);
}

TEST(Elaborate, ErrorsCarryPositions) {
  LlvmDialect d;
  try {
    syntax::ParseProgram(d, "{\n^bb0(%a : i8):\n  %b = llvm.frob %a : i8\n  llvm.return %b : i8\n}",
                         {});
    FAIL();
  } catch (const ElaborationError& e) {
    EXPECT_EQ(e.loc().line, 3);
    EXPECT_EQ(std::string(e.what()).rfind("3:", 0), 0u) << e.what();
  }
}

TEST(Elaborate, AttributeExpressions) {
  PolyDialect d({17, 3});
  auto p = Parse(d, R"({
^bb0():
  %e = "arith.constant"() {value = 2**n + 3 * (q - 1)} : () -> index
  return %e : index
})", d.Symbols());
  EXPECT_EQ(std::get<BigInt>(*p.com.lets[0].op.FindAttr("value")), BigInt(8 + 48));
  EXPECT_THROW(Parse(d, R"({
^bb0():
  %e = "arith.constant"() {value = 2**m} : () -> index
  return %e : index
})", d.Symbols()),
               ElaborationError);
}

TEST(Elaborate, LeadingZerosAreDecimal) {
  LlvmDialect d;
  auto p = Parse(d, R"({
^bb0():
  %c = llvm.mlir.constant(019 : i8) : i8
  llvm.return %c : i8
})");
  EXPECT_EQ(std::get<BigInt>(*p.com.lets[0].op.FindAttr("value")), BigInt(19));
  EXPECT_EQ(DecimalBigInt("0000"), BigInt(0));
  EXPECT_EQ(DecimalBigInt("0100"), BigInt(100));
}

TEST(Print, ReturnOnly) {
  LlvmDialect d;
  std::string text = syntax::Print(d, Ctxt{IntType(8)}, Com{{}, Var{0, IntType(8)}});
  auto ast = syntax::Parse(text);
  ASSERT_EQ(ast.body.ops.size(), 1u);
  EXPECT_EQ(ast.body.ops[0].name, "llvm.return");
}

TEST(Print, WideConstantsSurviveExactly) {
  LlvmDialect d;
  auto p = Parse(d, R"({
^bb0(%x : i200):
  %c = llvm.mlir.constant(1606938044258990275541962092341162602522202993782792835301375 : i200) : i200
  %r = llvm.add %x, %c : i200
  llvm.return %r : i200
})");
  std::string text = syntax::Print(d, p.ctxt, p.com);
  EXPECT_NE(text.find("1606938044258990275541962092341162602522202993782792835301375"),
            std::string::npos);
  auto back = syntax::ParseProgram(d, text, {});
  EXPECT_EQ(back.com, p.com);
}

TEST(Print, CorpusRoundTrip) {
  auto corpus = testing::LoadCorpus();
  ASSERT_GE(corpus.size(), 30u);
  std::set<DialectKind> kinds;
  for (const auto& entry : corpus) {
    SCOPED_TRACE(entry.name);
    auto inst = MakeDialect(entry.config);
    auto p = syntax::ParseProgram(*inst.dialect, entry.text, inst.params);
    std::string printed = syntax::Print(*inst.dialect, p.ctxt, p.com);
    auto back = syntax::ParseProgram(*inst.dialect, printed, inst.params);
    EXPECT_EQ(back.ctxt, p.ctxt);
    EXPECT_EQ(back.com, p.com);
    EXPECT_EQ(syntax::Print(*inst.dialect, back.ctxt, back.com), printed);
    kinds.insert(entry.config.kind);
  }
  EXPECT_EQ(kinds.size(), 4u);
}

// Feeds arbitrary bytes and corpus mutations through parse and elaboration.
// Only positioned errors may come out.
TEST(Fuzz, OnlyPositionedErrors) {
  auto corpus = testing::LoadCorpus();
  Rng rng(99);
  const std::string alphabet = "{}()^%:=,.\"<>-!_ \n0123456789abcilnrstxyz";
  std::size_t accepted = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string text;
    const auto& entry = corpus[UniformBelow(rng, corpus.size())];
    if (i % 2 == 0) {
      std::size_t len = UniformBelow(rng, 80);
      for (std::size_t k = 0; k < len; ++k) {
        text += (i % 4 == 0) ? static_cast<char>(UniformBelow(rng, 256))
                             : alphabet[UniformBelow(rng, alphabet.size())];
      }
    } else {
      text = entry.text;
      std::size_t edits = 1 + UniformBelow(rng, 4);
      for (std::size_t k = 0; k < edits && !text.empty(); ++k) {
        std::size_t at = UniformBelow(rng, text.size());
        switch (UniformBelow(rng, 3)) {
          case 0: text.erase(at, 1 + UniformBelow(rng, 8)); break;
          case 1: text.insert(at, 1, alphabet[UniformBelow(rng, alphabet.size())]); break;
          default: text[at] = static_cast<char>(UniformBelow(rng, 256)); break;
        }
      }
    }
    auto inst = MakeDialect(entry.config);
    try {
      syntax::ParseProgram(*inst.dialect, text, inst.params);
      ++accepted;
    } catch (const ParseError& e) {
      EXPECT_GE(e.loc().line, 1);
      EXPECT_GE(e.loc().col, 1);
    } catch (const ElaborationError& e) {
      EXPECT_GE(e.loc().line, 1);
    }
  }
  EXPECT_LT(accepted, 5000u);
}

}  // namespace
}  // namespace ssair
