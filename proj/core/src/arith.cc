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

#include "ssair/dialects/arith.h"

#include <algorithm>

namespace ssair {
namespace {

bool IsNumeric(const Type& t) { return t == ArithInt() || t == ArithNat(); }

const std::vector<std::string>& Predicates() {
  static const std::vector<std::string> kPreds = {"eq", "ne", "lt",
                                                  "le", "gt", "ge"};
  return kPreds;
}

bool ValidPredicate(const Attribute* a) {
  if (!a || !std::holds_alternative<std::string>(*a)) return false;
  const auto& p = Predicates();
  return std::find(p.begin(), p.end(), std::get<std::string>(*a)) != p.end();
}

[[noreturn]] void Fail(ElabErrorKind kind, const std::string& msg) {
  throw ElabError(kind, msg);
}

}  // namespace

Type ArithInt() { return Type("int"); }
Type ArithNat() { return Type("nat"); }
Type ArithBool() { return Type("bool"); }

Op ArithConstant(const Type& t, const BigInt& value) {
  return Op{"arith.constant", t, {{"value", value}}};
}
Op ArithBoolConstant(bool value) {
  return Op{"arith.constant", ArithBool(), {{"value", value}}};
}
Op ArithOp(const std::string& name, const Type& t) { return Op{name, t, {}}; }
Op ArithCmp(const std::string& predicate, const Type& t) {
  return Op{"arith.cmp", t, {{"predicate", predicate}}};
}

Value IntVal(const BigInt& v) { return Value(ArithInt(), v); }
Value NatVal(const BigInt& v) { return Value(ArithNat(), v); }
Value BoolVal(bool v) { return Value(ArithBool(), v); }

std::optional<OpSignature> ArithDialect::Signature(const Op& op) const {
  const Type& t = op.type;
  OpSignature sig;
  if (op.name == "arith.constant") {
    if (op.attrs.size() != 1) return std::nullopt;
    const Attribute* v = op.FindAttr("value");
    if (!v) return std::nullopt;
    if (t == ArithBool()) {
      if (!std::holds_alternative<bool>(*v)) return std::nullopt;
    } else if (IsNumeric(t)) {
      if (!std::holds_alternative<BigInt>(*v)) return std::nullopt;
      if (t == ArithNat() && std::get<BigInt>(*v) < 0) return std::nullopt;
    } else {
      return std::nullopt;
    }
    sig.out = t;
    return sig;
  }
  if (op.name == "arith.cmp") {
    if (!IsNumeric(t) || op.attrs.size() != 1 ||
        !ValidPredicate(op.FindAttr("predicate"))) {
      return std::nullopt;
    }
    sig.args = {t, t};
    sig.out = ArithBool();
    return sig;
  }
  if (!op.attrs.empty()) return std::nullopt;
  if ((op.name == "arith.add" || op.name == "arith.mul") && IsNumeric(t)) {
    sig.args = {t, t};
    sig.out = t;
    return sig;
  }
  if (op.name == "arith.sub" && t == ArithInt()) {
    sig.args = {t, t};
    sig.out = t;
    return sig;
  }
  if (op.name == "arith.copy" && IsValidType(t)) {
    sig.args = {t};
    sig.out = t;
    return sig;
  }
  if (op.name == "arith.to_int" && t == ArithNat()) {
    sig.args = {t};
    sig.out = ArithInt();
    return sig;
  }
  return std::nullopt;
}

Value ArithDialect::Denote(const Op& op, std::span<const Value> args,
                           std::span<const RegionEvaluator>,
                           EffectState*) const {
  const std::string& n = op.name;
  if (n == "arith.constant") {
    const Attribute& v = *op.FindAttr("value");
    if (op.type == ArithBool()) return BoolVal(std::get<bool>(v));
    return Value(op.type, std::get<BigInt>(v));
  }
  if (n == "arith.copy") return args[0];
  if (n == "arith.to_int") return IntVal(args[0].AsInt());
  const BigInt& a = args[0].AsInt();
  const BigInt& b = args[1].AsInt();
  if (n == "arith.add") return Value(op.type, BigInt(a + b));
  if (n == "arith.mul") return Value(op.type, BigInt(a * b));
  if (n == "arith.sub") return IntVal(a - b);
  if (n == "arith.cmp") {
    const auto& p = std::get<std::string>(*op.FindAttr("predicate"));
    bool r = p == "eq"   ? a == b
             : p == "ne" ? a != b
             : p == "lt" ? a < b
             : p == "le" ? a <= b
             : p == "gt" ? a > b
                         : a >= b;
    return BoolVal(r);
  }
  throw IrError("arith: cannot denote " + n);
}

std::optional<Type> ArithDialect::ParseType(std::string_view text) const {
  if (text == "!int") return ArithInt();
  if (text == "!nat") return ArithNat();
  if (text == "!bool") return ArithBool();
  return std::nullopt;
}

std::string ArithDialect::PrintType(const Type& t) const {
  return "!" + t.tag();
}

bool ArithDialect::IsValidType(const Type& t) const {
  return t == ArithInt() || t == ArithNat() || t == ArithBool();
}

Op ArithDialect::BuildOp(const OpSyntax& syn) const {
  const std::string& n = syn.name;
  if (n != "arith.constant" && n != "arith.add" && n != "arith.mul" &&
      n != "arith.sub" && n != "arith.cmp" && n != "arith.to_int" &&
      n != "arith.copy") {
    Fail(ElabErrorKind::kUnknownOp,
         "unknown operation '" + n + "' in dialect " + name());
  }
  if (syn.num_regions != 0) {
    Fail(ElabErrorKind::kRegionSignature, "'" + n + "' takes no regions");
  }
  Op op{n, Type(), syn.attrs};
  if (n == "arith.constant") {
    auto v = syn.attrs.find("value");
    if (v == syn.attrs.end() || syn.attrs.size() != 1) {
      Fail(ElabErrorKind::kMalformedAttr,
           "'arith.constant' needs exactly a 'value' attribute");
    }
    std::optional<Type> t = syn.result_type;
    auto at = syn.attr_types.find("value");
    if (!t && at != syn.attr_types.end()) t = at->second;
    if (!t) {
      t = std::holds_alternative<bool>(v->second) ? ArithBool() : ArithInt();
    }
    op.type = *t;
  } else {
    if (syn.operand_types.empty()) {
      Fail(ElabErrorKind::kTypeMismatch, "'" + n + "' needs operands");
    }
    op.type = syn.operand_types[0];
  }
  if (!Signature(op)) {
    Fail(ElabErrorKind::kMalformedAttr,
         "malformed '" + n + "' at type " + PrintType(op.type));
  }
  return op;
}

std::optional<std::vector<Value>> ArithDialect::Enumerate(
    const Type& t, const EnumLimits&) const {
  if (t == ArithBool()) return std::vector<Value>{BoolVal(false), BoolVal(true)};
  return std::nullopt;
}

Value ArithDialect::RandomValue(const Type& t, Rng& rng) const {
  if (t == ArithBool()) return BoolVal(UniformBelow(rng, 2) == 1);
  if (t == ArithNat()) return NatVal(UniformBelow(rng, 17));
  return IntVal(BigInt(static_cast<std::int64_t>(UniformBelow(rng, 129)) - 64));
}

Value ArithDialect::ParseValue(const Type& t, std::string_view text) const {
  std::string s(text);
  if (t == ArithBool()) {
    if (s == "true") return BoolVal(true);
    if (s == "false") return BoolVal(false);
    throw ElabError(ElabErrorKind::kBadValue, "expected true or false");
  }
  bool neg = !s.empty() && s[0] == '-';
  std::string digits = neg ? s.substr(1) : s;
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ElabError(ElabErrorKind::kBadValue, "expected an integer, got '" + s + "'");
  }
  BigInt v = DecimalBigInt(digits);
  if (neg) v = -v;
  if (t == ArithNat() && v < 0) {
    throw ElabError(ElabErrorKind::kBadValue, "naturals cannot be negative");
  }
  return Value(t, v);
}

bool ArithDialect::Inhabits(const Type& t, const Value& v) const {
  if (!(v.type() == t)) return false;
  if (t == ArithBool()) return std::holds_alternative<bool>(v.payload());
  const auto* i = std::get_if<BigInt>(&v.payload());
  if (!i) return false;
  return t == ArithInt() || (t == ArithNat() && *i >= 0);
}

const std::vector<RewriteText>& ArithRewriteTexts() {
  static const std::vector<RewriteText> kTexts = {
      {"add_one_sub_one",
       R"({
^bb0(%x : !int):
  %one = arith.constant(1 : !int) : !int
  %y = arith.add %x, %one : !int
  %z = arith.sub %y, %one : !int
  return %z : !int
})",
       R"({
^bb0(%x : !int):
  return %x : !int
})"},
      {"add_zero",
       R"({
^bb0(%x : !int):
  %zero = arith.constant(0 : !int) : !int
  %y = arith.add %x, %zero : !int
  return %y : !int
})",
       R"({
^bb0(%x : !int):
  return %x : !int
})"},
      {"add_commute",
       R"({
^bb0(%a : !int, %b : !int):
  %y = arith.add %a, %b : !int
  return %y : !int
})",
       R"({
^bb0(%a : !int, %b : !int):
  %y = arith.add %b, %a : !int
  return %y : !int
})"},
      {"mul_commute",
       R"({
^bb0(%a : !int, %b : !int):
  %y = arith.mul %a, %b : !int
  return %y : !int
})",
       R"({
^bb0(%a : !int, %b : !int):
  %y = arith.mul %b, %a : !int
  return %y : !int
})"},
  };
  return kTexts;
}

std::vector<PeepholeRewrite> ArithRewrites(const Dialect& d) {
  std::vector<PeepholeRewrite> out;
  for (const RewriteText& t : ArithRewriteTexts())
    out.push_back(InstantiateRewrite(d, t, ElabParams{}));
  return out;
}

}  // namespace ssair
