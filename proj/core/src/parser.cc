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

#include <cctype>
#include <set>
#include <utility>

#include "ssair/syntax/ast.h"

namespace ssair::syntax {

std::string ToString(const SourceLoc& loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.col);
}

ParseError::ParseError(SourceLoc loc, const std::string& message)
    : std::runtime_error(ToString(loc) + ": " + message), loc_(loc) {}

IntExpr IntExpr::Lit(BigInt v, SourceLoc loc) {
  IntExpr e;
  e.kind = Kind::kLit;
  e.lit = std::move(v);
  e.loc = loc;
  return e;
}

std::string IntExpr::ToString() const {
  auto bin = [&](const char* op) {
    return "(" + kids[0].ToString() + " " + op + " " + kids[1].ToString() +
           ")";
  };
  switch (kind) {
    case Kind::kLit: return lit.str();
    case Kind::kSym: return sym;
    case Kind::kNeg: return "-" + kids[0].ToString();
    case Kind::kAdd: return bin("+");
    case Kind::kSub: return bin("-");
    case Kind::kMul: return bin("*");
    case Kind::kPow: return bin("**");
  }
  return "?";
}

namespace {

constexpr int kMaxDepth = 200;

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
         c == '$' || c == '.';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GenericAst ParseModule() {
    SkipWs();
    bool braced = Eat('{');
    GenericAst ast;
    ast.body = ParseBlock(braced ? '}' : '\0', 0);
    if (braced) Expect('}', "'}' closing the module");
    SkipWs();
    if (!AtEnd()) Fail("expected end of input");
    return ast;
  }

 private:
  // ---- scanning -------------------------------------------------------

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  SourceLoc Loc() const { return SourceLoc{line_, col_}; }

  void Advance() {
    if (AtEnd()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipWs() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '/' && Peek(1) == '/') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string Found() const {
    if (AtEnd()) return "end of input";
    unsigned char c = static_cast<unsigned char>(Peek());
    if (c >= 0x20 && c < 0x7f) return std::string("'") + char(c) + "'";
    static const char* kHex = "0123456789abcdef";
    return std::string("byte 0x") + kHex[c >> 4] + kHex[c & 15];
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(Loc(), what + ", found " + Found());
  }
  [[noreturn]] void FailAt(SourceLoc loc, const std::string& what) const {
    throw ParseError(loc, what);
  }

  bool Eat(char c) {
    SkipWs();
    if (Peek() != c || AtEnd()) return false;
    Advance();
    return true;
  }
  void Expect(char c, const std::string& what) {
    if (!Eat(c)) Fail("expected " + what);
  }
  bool EatArrow() {
    SkipWs();
    if (Peek() == '-' && Peek(1) == '>') {
      Advance();
      Advance();
      return true;
    }
    return false;
  }

  std::string Ident(const std::string& what) {
    SkipWs();
    if (!IsIdentStart(Peek())) Fail("expected " + what);
    std::string out;
    while (!AtEnd() && IsIdentChar(Peek())) {
      out += Peek();
      Advance();
    }
    return out;
  }

  std::string SuffixId() {
    std::string out;
    while (!AtEnd() && IsIdentChar(Peek())) {
      out += Peek();
      Advance();
    }
    return out;
  }

  AstValueRef ValueName() {
    SkipWs();
    SourceLoc loc = Loc();
    if (Peek() != '%') Fail("expected an SSA value name like '%x'");
    Advance();
    std::string name = SuffixId();
    if (name.empty()) Fail("expected an SSA value name after '%'");
    return AstValueRef{std::move(name), loc};
  }

  std::string StringLit() {
    SkipWs();
    if (Peek() != '"') Fail("expected a string literal");
    SourceLoc start = Loc();
    Advance();
    std::string out;
    while (true) {
      if (AtEnd() || Peek() == '\n') {
        FailAt(start, "unterminated string literal");
      }
      char c = Peek();
      Advance();
      if (c == '"') break;
      if (c == '\\') {
        char e = Peek();
        if (AtEnd()) FailAt(start, "unterminated string literal");
        Advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case '\\': out += '\\'; break;
          case '"': out += '"'; break;
          default: Fail("unknown escape sequence");
        }
        continue;
      }
      out += c;
    }
    return out;
  }

  // A type spelling: `i8`, `i_`, `!R`, `index`, `tensor<4xindex>`.
  std::string TypeText() {
    SkipWs();
    std::string out;
    if (Peek() == '!') {
      out += '!';
      Advance();
      std::string id = SuffixId();
      if (id.empty()) Fail("expected a type name after '!'");
      out += id;
    } else if (IsIdentStart(Peek())) {
      out = SuffixId();
    } else {
      Fail("expected a type");
    }
    if (Peek() == '<') {
      SourceLoc open = Loc();
      int depth = 0;
      do {
        if (AtEnd()) FailAt(open, "unbalanced '<' in type");
        char c = Peek();
        if (c == '<') ++depth;
        if (c == '>') --depth;
        if (c == '{' || c == '}' || c == ';') {
          Fail("expected '>' closing the type parameters");
        }
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out += c;
        Advance();
      } while (depth > 0);
    }
    return out;
  }

  std::vector<std::string> TypeList() {
    std::vector<std::string> out;
    Expect('(', "'('");
    SkipWs();
    if (Eat(')')) return out;
    do {
      out.push_back(TypeText());
    } while (Eat(','));
    Expect(')', "')' or ',' in type list");
    return out;
  }

  // ---- integer expressions ----------------------------------------------

  IntExpr Binary(IntExpr::Kind k, IntExpr a, IntExpr b, SourceLoc loc) {
    IntExpr e;
    e.kind = k;
    e.loc = loc;
    e.kids.push_back(std::move(a));
    e.kids.push_back(std::move(b));
    return e;
  }

  IntExpr Expr(int depth) {
    if (depth > kMaxDepth) Fail("expression nested too deeply");
    SkipWs();
    SourceLoc loc = Loc();
    IntExpr lhs = Term(depth + 1);
    while (true) {
      SkipWs();
      if (Peek() == '+') {
        Advance();
        lhs = Binary(IntExpr::Kind::kAdd, std::move(lhs), Term(depth + 1),
                     loc);
      } else if (Peek() == '-' && Peek(1) != '>') {
        Advance();
        lhs = Binary(IntExpr::Kind::kSub, std::move(lhs), Term(depth + 1),
                     loc);
      } else {
        return lhs;
      }
    }
  }

  IntExpr Term(int depth) {
    if (depth > kMaxDepth) Fail("expression nested too deeply");
    SkipWs();
    SourceLoc loc = Loc();
    IntExpr lhs = Unary(depth + 1);
    while (true) {
      SkipWs();
      if (Peek() == '*' && Peek(1) != '*') {
        Advance();
        lhs = Binary(IntExpr::Kind::kMul, std::move(lhs), Unary(depth + 1),
                     loc);
      } else {
        return lhs;
      }
    }
  }

  IntExpr Unary(int depth) {
    if (depth > kMaxDepth) Fail("expression nested too deeply");
    SkipWs();
    SourceLoc loc = Loc();
    if (Peek() == '-') {
      Advance();
      IntExpr inner = Unary(depth + 1);
      if (inner.kind == IntExpr::Kind::kLit) {
        inner.lit = -inner.lit;
        inner.loc = loc;
        return inner;
      }
      IntExpr e;
      e.kind = IntExpr::Kind::kNeg;
      e.loc = loc;
      e.kids.push_back(std::move(inner));
      return e;
    }
    IntExpr base = Atom(depth + 1);
    SkipWs();
    if (Peek() == '*' && Peek(1) == '*') {
      Advance();
      Advance();
      return Binary(IntExpr::Kind::kPow, std::move(base), Unary(depth + 1),
                    loc);
    }
    return base;
  }

  IntExpr Atom(int depth) {
    SkipWs();
    SourceLoc loc = Loc();
    if (IsDigit(Peek())) {
      std::string digits;
      while (IsDigit(Peek())) {
        digits += Peek();
        Advance();
      }
      if (IsIdentStart(Peek())) Fail("expected a digit or operator");
      return IntExpr::Lit(DecimalBigInt(digits), loc);
    }
    if (IsIdentStart(Peek())) {
      IntExpr e;
      e.kind = IntExpr::Kind::kSym;
      e.sym = Ident("a symbol");
      e.loc = loc;
      return e;
    }
    if (Peek() == '(') {
      Advance();
      IntExpr inner = Expr(depth + 1);
      Expect(')', "')' closing the expression");
      return inner;
    }
    Fail("expected an integer, a symbol or '('");
  }

  AttrLiteral Literal() {
    SkipWs();
    if (Peek() == '"') return StringLit();
    if (Peek() == '[') {
      Advance();
      std::vector<IntExpr> elems;
      if (!Eat(']')) {
        do {
          elems.push_back(Expr(0));
        } while (Eat(','));
        Expect(']', "']' or ',' in list");
      }
      return elems;
    }
    if (IsIdentStart(Peek())) {
      std::size_t save = pos_;
      int sl = line_, sc = col_;
      std::string id = SuffixId();
      if (id == "true") return true;
      if (id == "false") return false;
      pos_ = save;
      line_ = sl;
      col_ = sc;
    }
    return Expr(0);
  }

  // ---- structure ----------------------------------------------------------

  using Scope = std::set<std::string>;

  void Define(const AstValueRef& v) {
    for (const Scope& s : scopes_) {
      if (s.count(v.name)) {
        FailAt(v.loc, "redefinition of SSA value %" + v.name);
      }
    }
    scopes_.back().insert(v.name);
  }

  void CheckUse(const AstValueRef& v) {
    if (scopes_.back().count(v.name)) return;
    for (const Scope& s : scopes_) {
      if (s.count(v.name)) {
        FailAt(v.loc, "%" + v.name +
                          " is defined outside this region; region bodies "
                          "may only read their own block arguments and "
                          "results");
      }
    }
    FailAt(v.loc, "use of undefined SSA value %" + v.name);
  }

  AstBlock ParseBlock(char closer, int depth) {
    if (depth > kMaxDepth) Fail("regions nested too deeply");
    AstBlock block;
    SkipWs();
    block.loc = Loc();
    if (Peek() != '^') Fail("expected a block label like '^bb0'");
    Advance();
    block.label = SuffixId();
    if (block.label.empty()) Fail("expected a block name after '^'");
    scopes_.emplace_back();
    Expect('(', "'(' opening the block arguments");
    SkipWs();
    if (!Eat(')')) {
      do {
        AstValueRef name = ValueName();
        Expect(':', "':' after block argument");
        std::string ty = TypeText();
        Define(name);
        block.args.push_back(AstBlockArg{name.name, std::move(ty), name.loc});
      } while (Eat(','));
      Expect(')', "')' or ',' in block arguments");
    }
    Expect(':', "':' after the block arguments");
    while (true) {
      SkipWs();
      if (AtEnd() || Peek() == closer) break;
      block.ops.push_back(ParseOp(depth));
    }
    block.end_loc = Loc();
    scopes_.pop_back();
    return block;
  }

  bool NextIsRegionList() {
    // At '(' : regions start with '(' '{'.
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p < text_.size() && text_[p] == '{';
  }

  bool NextIsOperandParen() {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p < text_.size() && (text_[p] == '%' || text_[p] == ')');
  }

  // true if a `%name` at the cursor starts the next operation.
  bool NextIsDefinition() {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && IsIdentChar(text_[p])) ++p;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p])))
      ++p;
    return p < text_.size() && text_[p] == '=';
  }

  void ParseOperandList(AstOp& op, bool parenthesized) {
    if (parenthesized) {
      Expect('(', "'('");
      SkipWs();
      if (Eat(')')) return;
    }
    do {
      AstValueRef v = ValueName();
      CheckUse(v);
      op.operands.push_back(std::move(v));
    } while (Eat(','));
    if (parenthesized) Expect(')', "')' or ',' in operand list");
  }

  void ParseAttrDict(AstOp& op) {
    Expect('{', "'{'");
    SkipWs();
    if (Eat('}')) return;
    do {
      SkipWs();
      AstAttr attr;
      attr.loc = Loc();
      attr.key = Ident("an attribute name");
      for (const AstAttr& a : op.attrs) {
        if (a.key == attr.key) FailAt(attr.loc, "duplicate attribute " + attr.key);
      }
      Expect('=', "'=' after attribute name");
      attr.value = Literal();
      if (Eat(':')) attr.type = TypeText();
      op.attrs.push_back(std::move(attr));
    } while (Eat(','));
    Expect('}', "'}' or ',' in attribute dictionary");
  }

  void ParseRegions(AstOp& op, int depth) {
    Expect('(', "'('");
    do {
      Expect('{', "'{' opening a region");
      op.regions.push_back(ParseBlock('}', depth + 1));
      Expect('}', "'}' closing the region");
    } while (Eat(','));
    Expect(')', "')' or ',' after regions");
  }

  void ParseTypeAnnotation(AstOp& op) {
    SkipWs();
    if (Peek() == '(') {
      op.input_types = TypeList();
      if (!EatArrow()) Fail("expected '->' in function type");
      SkipWs();
      if (Peek() == '(') {
        op.result_types = TypeList();
      } else {
        op.result_types = std::vector<std::string>{TypeText()};
      }
    } else {
      op.short_type = TypeText();
    }
  }

  AstOp ParseOp(int depth) {
    AstOp op;
    SkipWs();
    op.loc = Loc();
    if (Peek() == '%') {
      op.result = ValueName();
      Expect('=', "'=' after result name");
      SkipWs();
    }
    if (Peek() == '"') {
      SourceLoc loc = Loc();
      op.name = StringLit();
      if (op.name.empty()) FailAt(loc, "empty operation name");
    } else if (IsIdentStart(Peek())) {
      op.name = Ident("an operation name");
    } else {
      Fail("expected an operation name");
    }

    bool can_take_operands = true;
    bool have_regions = false;
    bool have_attrs = false;
    SkipWs();
    if (Peek() == '"') {
      // `llvm.icmp "slt" %a, %b`
      AstAttr attr;
      attr.loc = Loc();
      attr.key = "predicate";
      attr.value = StringLit();
      op.attrs.push_back(std::move(attr));
    }
    while (true) {
      SkipWs();
      char c = Peek();
      if (AtEnd()) break;
      if (c == '(' && NextIsRegionList() && !have_regions) {
        ParseRegions(op, depth);
        have_regions = true;
        can_take_operands = false;
      } else if (c == '(' && can_take_operands && NextIsOperandParen()) {
        ParseOperandList(op, true);
        can_take_operands = false;
      } else if (c == '(' && can_take_operands) {
        // `llvm.mlir.constant(3 : i8)`
        Advance();
        AstAttr attr;
        SkipWs();
        attr.loc = Loc();
        attr.key = "value";
        attr.value = Literal();
        if (Eat(':')) attr.type = TypeText();
        Expect(')', "')' after the literal operand");
        for (const AstAttr& a : op.attrs) {
          if (a.key == "value") FailAt(attr.loc, "duplicate attribute value");
        }
        op.attrs.push_back(std::move(attr));
        can_take_operands = false;
      } else if (c == '%' && can_take_operands && !NextIsDefinition()) {
        ParseOperandList(op, false);
        can_take_operands = false;
      } else if (c == '{' && !have_attrs) {
        ParseAttrDict(op);
        have_attrs = true;
        can_take_operands = false;
      } else if (c == ':') {
        Advance();
        ParseTypeAnnotation(op);
        break;
      } else {
        break;
      }
    }
    if (op.result) Define(*op.result);
    return op;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Scope> scopes_;
};

}  // namespace

GenericAst Parse(std::string_view text) { return Parser(text).ParseModule(); }

}  // namespace ssair::syntax
