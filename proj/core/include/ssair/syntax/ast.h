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

// Generic, dialect-agnostic syntax tree for the MLIR text subset.

#ifndef SSAIR_SYNTAX_AST_H_
#define SSAIR_SYNTAX_AST_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ssair/ir/bitvec.h"

namespace ssair::syntax {

struct SourceLoc {
  int line = 1;
  int col = 1;
};

std::string ToString(const SourceLoc& loc);  // "line:col"

// Integer attribute expression: literals, symbols such as `n` or `q`
// bound at elaboration, and + - * ** with the usual precedence.
struct IntExpr {
  enum class Kind { kLit, kSym, kNeg, kAdd, kSub, kMul, kPow };
  Kind kind = Kind::kLit;
  BigInt lit;
  std::string sym;
  std::vector<IntExpr> kids;
  SourceLoc loc;

  static IntExpr Lit(BigInt v, SourceLoc loc = {});
  std::string ToString() const;
};

using AttrLiteral =
    std::variant<IntExpr, std::string, bool, std::vector<IntExpr>>;

struct AstAttr {
  std::string key;
  AttrLiteral value;
  std::optional<std::string> type;  // raw type text after `:`
  SourceLoc loc;
};

struct AstValueRef {
  std::string name;  // without the leading '%'
  SourceLoc loc;
};

struct AstBlockArg {
  std::string name;
  std::string type;
  SourceLoc loc;
};

struct AstBlock;

struct AstOp {
  std::optional<AstValueRef> result;
  std::string name;
  SourceLoc loc;
  std::vector<AstValueRef> operands;
  std::vector<AstBlock> regions;
  std::vector<AstAttr> attrs;
  // `: (a, b) -> c` sets both; a lone `: T` sets only short_type.
  std::optional<std::vector<std::string>> input_types;
  std::optional<std::vector<std::string>> result_types;
  std::optional<std::string> short_type;
};

struct AstBlock {
  std::string label;
  std::vector<AstBlockArg> args;
  std::vector<AstOp> ops;
  SourceLoc loc;
  SourceLoc end_loc;
};

// A module is a single block.
struct GenericAst {
  AstBlock body;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& message);
  const SourceLoc& loc() const { return loc_; }

 private:
  SourceLoc loc_;
};

// Accepts `{ ^bb(...): ops }` or a bare block. Block names are unique
// within their scope and every operand refers to an earlier block argument
// or result. Region bodies are closed: they may only read their own block
// arguments and results. Throws ParseError.
GenericAst Parse(std::string_view text);

}  // namespace ssair::syntax

#endif  // SSAIR_SYNTAX_AST_H_
