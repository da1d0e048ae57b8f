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

#include "ssair/dialects/llvm.h"

#include <algorithm>
#include <charconv>

namespace ssair {
namespace {

constexpr char kConstant[] = "llvm.mlir.constant";

bool IsBinary(const std::string& n) {
  static const char* kNames[] = {"llvm.and",  "llvm.or",   "llvm.xor",
                                 "llvm.shl",  "llvm.lshr", "llvm.ashr",
                                 "llvm.urem", "llvm.srem", "llvm.add",
                                 "llvm.mul",  "llvm.sub",  "llvm.sdiv",
                                 "llvm.udiv"};
  return std::find(std::begin(kNames), std::end(kNames), n) !=
         std::end(kNames);
}

bool IsKnown(const std::string& n) {
  return n == "llvm.not" || IsBinary(n) || n == "llvm.select" ||
         n == "llvm.icmp" || n == kConstant;
}

unsigned WidthOf(const Type& t) { return static_cast<unsigned>(t.param()); }

bool IsIntType(const Type& t) {
  return t.tag() == "i" && !t.symbolic() && t.param() >= 1 &&
         t.param() <= kLlvmMaxWidth;
}

// Valid attribute payload for `op`, or false.
bool AttrsOk(const Op& op) {
  if (op.name == "llvm.icmp") {
    if (op.attrs.size() != 1) return false;
    const auto* p = op.FindAttr("predicate");
    if (!p || !std::holds_alternative<std::string>(*p)) return false;
    const auto& preds = IcmpPredicates();
    return std::find(preds.begin(), preds.end(),
                     std::get<std::string>(*p)) != preds.end();
  }
  if (op.name == kConstant) {
    if (op.attrs.size() != 1) return false;
    const auto* v = op.FindAttr("value");
    return v && std::holds_alternative<BigInt>(*v);
  }
  return op.attrs.empty();
}

[[noreturn]] void Fail(ElabErrorKind kind, const std::string& msg) {
  throw ElabError(kind, msg);
}

}  // namespace

Type IntType(unsigned width) { return Type("i", width); }

const std::vector<std::string>& LlvmOpNames() {
  static const std::vector<std::string> kNames = {
      "llvm.not",  "llvm.and",  "llvm.or",   "llvm.xor",
      "llvm.shl",  "llvm.lshr", "llvm.ashr", "llvm.urem",
      "llvm.srem", "llvm.add",  "llvm.mul",  "llvm.sub",
      "llvm.sdiv", "llvm.udiv", "llvm.select", "llvm.icmp"};
  return kNames;
}

std::size_t LlvmArity(const std::string& n) {
  if (n == "llvm.not") return 1;
  if (n == "llvm.select") return 3;
  if (n == kConstant) return 0;
  return 2;
}

const std::vector<std::string>& IcmpPredicates() {
  static const std::vector<std::string> kPreds = {
      "eq", "ne", "ugt", "uge", "ult", "ule", "sgt", "sge", "slt", "sle"};
  return kPreds;
}

Op LlvmOp(const std::string& name, unsigned width,
          const std::string& predicate) {
  Op op{name, IntType(width), {}};
  if (name == "llvm.icmp") op.attrs["predicate"] = predicate;
  return op;
}

Op LlvmConstant(unsigned width, const BigInt& value) {
  Op op{kConstant, IntType(width), {}};
  op.attrs["value"] = value;
  return op;
}

Value PoisonValue(unsigned width) { return Value(IntType(width), Poison{}); }

Value IntValue(unsigned width, const BigInt& v) {
  return Value(IntType(width), BitVec::FromBigInt(width, v));
}

std::optional<OpSignature> LlvmDialect::Signature(const Op& op) const {
  if (!IsKnown(op.name) || !IsIntType(op.type) || !AttrsOk(op)) {
    return std::nullopt;
  }
  const Type& t = op.type;
  OpSignature sig;
  sig.out = t;
  if (op.name == "llvm.not") {
    sig.args = {t};
  } else if (op.name == "llvm.select") {
    sig.args = {IntType(1), t, t};
  } else if (op.name == "llvm.icmp") {
    sig.args = {t, t};
    sig.out = IntType(1);
  } else if (op.name == kConstant) {
    sig.args = {};
  } else {
    sig.args = {t, t};
  }
  return sig;
}

Value LlvmDialect::Denote(const Op& op, std::span<const Value> args,
                          std::span<const RegionEvaluator>,
                          EffectState*) const {
  return LlvmDenote(op, args);
}

Value LlvmDenote(const Op& op, std::span<const Value> args) {
  const unsigned w = WidthOf(op.type);
  const std::string& n = op.name;
  if (n == kConstant) {
    return IntValue(w, std::get<BigInt>(*op.FindAttr("value")));
  }
  if (n == "llvm.select") {
    if (args[0].IsPoison()) return PoisonValue(w);
    return args[0].AsBitVec().IsZero() ? args[2] : args[1];
  }
  for (const Value& a : args)
    if (a.IsPoison()) return n == "llvm.icmp" ? PoisonValue(1) : PoisonValue(w);

  const BitVec& x = args[0].AsBitVec();
  auto bv = [&](BitVec b) { return Value(IntType(w), std::move(b)); };
  if (n == "llvm.not") return bv(x.Not());
  const BitVec& y = args[1].AsBitVec();
  if (n == "llvm.and") return bv(x.And(y));
  if (n == "llvm.or") return bv(x.Or(y));
  if (n == "llvm.xor") return bv(x.Xor(y));
  if (n == "llvm.add") return bv(x.Add(y));
  if (n == "llvm.sub") return bv(x.Sub(y));
  if (n == "llvm.mul") return bv(x.Mul(y));
  if (n == "llvm.shl" || n == "llvm.lshr" || n == "llvm.ashr") {
    if (y.UGe(w)) return PoisonValue(w);
    unsigned s = static_cast<unsigned>(y.ToUint64());
    if (n == "llvm.shl") return bv(x.Shl(s));
    if (n == "llvm.lshr") return bv(x.LShr(s));
    return bv(x.AShr(s));
  }
  if (n == "llvm.udiv" || n == "llvm.urem") {
    if (y.IsZero()) return PoisonValue(w);
    return bv(n == "llvm.udiv" ? x.UDiv(y) : x.URem(y));
  }
  if (n == "llvm.sdiv" || n == "llvm.srem") {
    if (y.IsZero() || (x.IsSignedMin() && y.IsAllOnes())) {
      return PoisonValue(w);
    }
    return bv(n == "llvm.sdiv" ? x.SDiv(y) : x.SRem(y));
  }
  if (n == "llvm.icmp") {
    const std::string& p = std::get<std::string>(*op.FindAttr("predicate"));
    auto u = x.UCompare(y);
    auto s = x.SCompare(y);
    bool r = false;
    if (p == "eq") r = u == 0;
    else if (p == "ne") r = u != 0;
    else if (p == "ugt") r = u > 0;
    else if (p == "uge") r = u >= 0;
    else if (p == "ult") r = u < 0;
    else if (p == "ule") r = u <= 0;
    else if (p == "sgt") r = s > 0;
    else if (p == "sge") r = s >= 0;
    else if (p == "slt") r = s < 0;
    else if (p == "sle") r = s <= 0;
    return Value(IntType(1), BitVec(1, r ? 1 : 0));
  }
  throw IrError("llvm: cannot denote " + n);
}

std::optional<Type> LlvmDialect::ParseType(std::string_view text) const {
  if (text.size() < 2 || text[0] != 'i') return std::nullopt;
  if (text == "i_") return Type::Symbolic("i");
  unsigned w = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), w);
  if (ec != std::errc() || ptr != text.data() + text.size() || w == 0 ||
      w > kLlvmMaxWidth) {
    return std::nullopt;
  }
  return IntType(w);
}

std::string LlvmDialect::PrintType(const Type& t) const {
  if (t.symbolic()) return t.tag() + "_";
  return t.tag() + std::to_string(t.param());
}

bool LlvmDialect::IsValidType(const Type& t) const { return IsIntType(t); }

Op LlvmDialect::BuildOp(const OpSyntax& syn) const {
  const std::string& n = syn.name;
  if (!IsKnown(n)) {
    Fail(ElabErrorKind::kUnknownOp, "unknown operation '" + n +
                                        "' in dialect llvm");
  }
  if (syn.num_regions != 0) {
    Fail(ElabErrorKind::kRegionSignature, "'" + n + "' takes no regions");
  }
  for (const auto& [key, value] : syn.attrs) {
    if (key == "nsw" || key == "nuw" || key == "exact" ||
        key == "overflowFlags" || key == "isExact") {
      Fail(ElabErrorKind::kMalformedAttr,
           "poison-generating flag '" + key + "' is not supported");
    }
    bool ok = (n == "llvm.icmp" && key == "predicate") ||
              (n == kConstant && key == "value");
    if (!ok) {
      Fail(ElabErrorKind::kMalformedAttr,
           "unexpected attribute '" + key + "' on '" + n + "'");
    }
  }

  std::optional<Type> t;
  if (n == kConstant) {
    t = syn.result_type;
    auto at = syn.attr_types.find("value");
    if (at != syn.attr_types.end()) {
      if (t && !(*t == at->second)) {
        Fail(ElabErrorKind::kTypeMismatch,
             "constant value type differs from its result type");
      }
      t = at->second;
    }
    auto v = syn.attrs.find("value");
    if (v == syn.attrs.end() || !std::holds_alternative<BigInt>(v->second)) {
      Fail(ElabErrorKind::kMalformedAttr,
           "'llvm.mlir.constant' needs an integer 'value' attribute");
    }
  } else {
    if (syn.operand_types.size() != LlvmArity(n)) {
      Fail(ElabErrorKind::kTypeMismatch,
           "'" + n + "' takes " + std::to_string(LlvmArity(n)) +
               " operands, got " + std::to_string(syn.operand_types.size()));
    }
    t = syn.operand_types[n == "llvm.select" ? 1 : 0];
  }
  if (!t) {
    Fail(ElabErrorKind::kTypeMismatch,
         "cannot determine the width of '" + n + "'");
  }
  if (!IsIntType(*t)) {
    Fail(ElabErrorKind::kTypeMismatch,
         "'" + n + "' works on integer types, got " + PrintType(*t));
  }
  Op op{n, *t, syn.attrs};
  if (n == "llvm.icmp" && !AttrsOk(op)) {
    Fail(ElabErrorKind::kMalformedAttr,
         "'llvm.icmp' needs a predicate: eq, ne, ugt, uge, ult, ule, sgt, "
         "sge, slt or sle");
  }
  return op;
}

std::optional<std::vector<Value>> LlvmDialect::Enumerate(
    const Type& t, const EnumLimits& limits) const {
  if (!IsIntType(t)) return std::nullopt;
  const unsigned w = WidthOf(t);
  if (w > limits.max_width || w >= 63 ||
      (std::uint64_t{1} << w) + 1 > limits.max_universe) {
    return std::nullopt;
  }
  std::vector<Value> out;
  out.reserve((std::size_t{1} << w) + 1);
  out.push_back(PoisonValue(w));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << w); ++v)
    out.push_back(Value(t, BitVec(w, v)));
  return out;
}

Value LlvmDialect::RandomValue(const Type& t, Rng& rng) const {
  const unsigned w = WidthOf(t);
  switch (UniformBelow(rng, 32)) {
    case 0: return PoisonValue(w);
    case 1: return Value(t, BitVec(w, 0));
    case 2: return Value(t, BitVec(w, 1));
    case 3: return Value(t, BitVec::AllOnes(w));
    case 4: return Value(t, BitVec::SignedMin(w));
    default: break;
  }
  BigInt v = 0;
  for (unsigned bits = 0; bits < w; bits += 64) {
    v <<= 64;
    v += rng();
  }
  return Value(t, BitVec::FromBigInt(w, v));
}

Value LlvmDialect::ParseValue(const Type& t, std::string_view text) const {
  if (!IsIntType(t)) {
    throw ElabError(ElabErrorKind::kBadValue, "not an integer type");
  }
  const unsigned w = WidthOf(t);
  if (text == "poison") return PoisonValue(w);
  std::string s(text);
  bool neg = !s.empty() && s[0] == '-';
  std::string digits = neg ? s.substr(1) : s;
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ElabError(ElabErrorKind::kBadValue,
                    "expected an integer or 'poison', got '" + s + "'");
  }
  BigInt v = DecimalBigInt(digits);
  return IntValue(w, neg ? BigInt(-v) : v);
}

bool LlvmDialect::Inhabits(const Type& t, const Value& v) const {
  if (!IsIntType(t) || !(v.type() == t)) return false;
  if (v.IsPoison()) return true;
  const auto* b = std::get_if<BitVec>(&v.payload());
  return b && b->width() == WidthOf(t);
}

bool LlvmDialect::Refines(const Value& src, const Value& tgt) const {
  return src.IsPoison() || src == tgt;
}

}  // namespace ssair
