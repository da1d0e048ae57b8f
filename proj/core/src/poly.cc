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

#include "ssair/dialects/poly.h"

#include <algorithm>
#include <charconv>

namespace ssair {
namespace {

[[noreturn]] void Fail(ElabErrorKind kind, const std::string& msg) {
  throw ElabError(kind, msg);
}

bool IsUnary(const std::string& n) {
  return n == "poly.leading_term" || n == "poly.to_tensor" ||
         n == "poly.mul_constant";
}

bool IsKnown(const std::string& n) {
  return n == "poly.add" || n == "poly.sub" || n == "poly.mul" ||
         IsUnary(n) || n == "poly.monomial" || n == "poly.monomial_mul" ||
         n == "poly.from_tensor" || n == "poly.constant" ||
         n == "arith.constant";
}

BigInt ParseBigInt(std::string_view s) {
  std::string t(s);
  bool neg = !t.empty() && t[0] == '-';
  std::string digits = neg ? t.substr(1) : t;
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ElabError(ElabErrorKind::kBadValue,
                    "expected an integer, got '" + t + "'");
  }
  BigInt v = DecimalBigInt(digits);
  return neg ? BigInt(-v) : v;
}

std::string Trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::vector<BigInt> ParseIntList(std::string_view text) {
  std::string s = Trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ElabError(ElabErrorKind::kBadValue,
                    "expected a list like [1, 2], got '" + s + "'");
  }
  std::vector<BigInt> out;
  std::string body = s.substr(1, s.size() - 2);
  if (Trim(body).empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = body.find(',', start);
    out.push_back(ParseBigInt(Trim(body.substr(start, comma - start))));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Type RingType() { return Type("R"); }
Type IndexType() { return Type("index"); }
Type TensorType(std::size_t length) {
  return Type("tensor", static_cast<std::int64_t>(length));
}

PolyDialect::PolyDialect(RingParams params) : params_(params) {
  if (params.q < 2) throw IrError("poly: modulus q must be at least 2");
  if (params.n > 16) throw IrError("poly: n above 16 is not supported");
}

ElabParams PolyDialect::Symbols() const {
  ElabParams p;
  p.symbols["q"] = params_.q;
  p.symbols["n"] = params_.n;
  return p;
}

Value PolyDialect::Ring(const RingElem& r) const {
  return Value(RingType(), r);
}

std::optional<OpSignature> PolyDialect::Signature(const Op& op) const {
  const std::string& n = op.name;
  if (!IsKnown(n)) return std::nullopt;
  const Type r = RingType();
  const Type idx = IndexType();
  const Type tensor = TensorType(params_.degree());
  OpSignature sig;
  auto attr_int = [&](const char* key) {
    const Attribute* a = op.FindAttr(key);
    return op.attrs.size() == 1 && a && std::holds_alternative<BigInt>(*a);
  };
  if (n == "arith.constant") {
    if (!(op.type == idx) || !attr_int("value")) return std::nullopt;
    sig.out = idx;
    return sig;
  }
  if (!(op.type == (n == "poly.to_tensor" ? tensor : r))) return std::nullopt;
  sig.out = op.type;
  if (n == "poly.constant") {
    const Attribute* a = op.FindAttr("value");
    if (op.attrs.size() != 1 || !a ||
        !(std::holds_alternative<BigInt>(*a) ||
          std::holds_alternative<std::vector<BigInt>>(*a))) {
      return std::nullopt;
    }
    return sig;
  }
  if (n == "poly.mul_constant") {
    if (!attr_int("value")) return std::nullopt;
  } else if (!op.attrs.empty()) {
    return std::nullopt;
  }
  if (n == "poly.add" || n == "poly.sub" || n == "poly.mul") {
    sig.args = {r, r};
  } else if (IsUnary(n)) {
    sig.args = {r};
  } else if (n == "poly.monomial") {
    sig.args = {idx, idx};
  } else if (n == "poly.monomial_mul") {
    sig.args = {r, idx};
  } else if (n == "poly.from_tensor") {
    sig.args = {tensor};
  }
  return sig;
}

Value PolyDialect::Denote(const Op& op, std::span<const Value> args,
                          std::span<const RegionEvaluator>,
                          EffectState*) const {
  const std::string& n = op.name;
  if (n == "arith.constant") {
    return Value(IndexType(), std::get<BigInt>(*op.FindAttr("value")));
  }
  if (n == "poly.constant") {
    const Attribute& a = *op.FindAttr("value");
    if (const auto* c = std::get_if<BigInt>(&a)) {
      return Ring(RingElem::Constant(params_, *c));
    }
    RingElem acc(params_);
    const auto& cs = std::get<std::vector<BigInt>>(a);
    for (std::size_t i = 0; i < cs.size(); ++i)
      acc = acc.Add(RingElem::Monomial(params_, cs[i], i));
    return Ring(acc);
  }
  if (n == "poly.monomial") {
    return Ring(RingElem::Monomial(params_, args[0].AsInt(), args[1].AsInt()));
  }
  if (n == "poly.from_tensor") {
    return Ring(RingElem(params_, args[0].AsTensor().elems));
  }
  const RingElem& p = args[0].AsRing();
  if (n == "poly.add") return Ring(p.Add(args[1].AsRing()));
  if (n == "poly.sub") return Ring(p.Sub(args[1].AsRing()));
  if (n == "poly.mul") return Ring(p.Mul(args[1].AsRing()));
  if (n == "poly.mul_constant") {
    return Ring(p.Scale(std::get<BigInt>(*op.FindAttr("value"))));
  }
  if (n == "poly.leading_term") return Ring(p.LeadingTerm());
  if (n == "poly.monomial_mul") return Ring(p.MulMonomial(args[1].AsInt()));
  if (n == "poly.to_tensor") {
    IntTensor t;
    for (auto c : p.coeffs()) t.elems.push_back(c);
    return Value(TensorType(params_.degree()), std::move(t));
  }
  throw IrError("poly: cannot denote " + n);
}

std::optional<Type> PolyDialect::ParseType(std::string_view text) const {
  if (text == "!R") return RingType();
  if (text == "index") return IndexType();
  // tensor<NxT> with T = index (int is accepted as a synonym).
  constexpr std::string_view kPrefix = "tensor<";
  if (text.substr(0, kPrefix.size()) != kPrefix || text.back() != '>') {
    return std::nullopt;
  }
  std::string_view inner =
      text.substr(kPrefix.size(), text.size() - kPrefix.size() - 1);
  std::size_t x = inner.find('x');
  if (x == std::string_view::npos) return std::nullopt;
  std::string_view elem = inner.substr(x + 1);
  if (elem != "index" && elem != "int") return std::nullopt;
  std::size_t len = 0;
  auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + x, len);
  if (ec != std::errc() || ptr != inner.data() + x) return std::nullopt;
  return TensorType(len);
}

std::string PolyDialect::PrintType(const Type& t) const {
  if (t == RingType()) return "!R";
  if (t.tag() == "tensor") return "tensor<" + std::to_string(t.param()) + "xindex>";
  return t.tag();
}

bool PolyDialect::IsValidType(const Type& t) const {
  return t == RingType() || t == IndexType() ||
         t == TensorType(params_.degree());
}

Op PolyDialect::BuildOp(const OpSyntax& syn) const {
  const std::string& n = syn.name;
  if (!IsKnown(n)) {
    Fail(ElabErrorKind::kUnknownOp,
         "unknown operation '" + n + "' in dialect poly");
  }
  if (syn.num_regions != 0) {
    Fail(ElabErrorKind::kRegionSignature, "'" + n + "' takes no regions");
  }
  Type t = n == "arith.constant"  ? IndexType()
           : n == "poly.to_tensor" ? TensorType(params_.degree())
                                   : RingType();
  Op op{n, t, syn.attrs};
  if (!Signature(op)) {
    Fail(ElabErrorKind::kMalformedAttr, "malformed attributes on '" + n + "'");
  }
  return op;
}

std::optional<std::vector<Value>> PolyDialect::Enumerate(
    const Type& t, const EnumLimits& limits) const {
  if (!(t == RingType())) return std::nullopt;
  const std::size_t d = params_.degree();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > limits.max_universe / params_.q) return std::nullopt;
    total *= params_.q;
  }
  std::vector<Value> out;
  out.reserve(total);
  std::vector<std::uint64_t> digits(d, 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.push_back(Ring(RingElem(params_, digits)));
    for (std::size_t i = 0; i < d; ++i) {
      if (++digits[i] < params_.q) break;
      digits[i] = 0;
    }
  }
  return out;
}

Value PolyDialect::RandomValue(const Type& t, Rng& rng) const {
  const std::size_t d = params_.degree();
  if (t == RingType()) {
    std::vector<std::uint64_t> c(d);
    for (auto& x : c) x = UniformBelow(rng, params_.q);
    return Ring(RingElem(params_, std::move(c)));
  }
  if (t == IndexType()) {
    return Value(t, BigInt(static_cast<std::int64_t>(UniformBelow(rng, 4 * d + 17)) - 8));
  }
  IntTensor out;
  for (std::size_t i = 0; i < d; ++i) {
    out.elems.push_back(
        BigInt(static_cast<std::int64_t>(UniformBelow(rng, 3 * params_.q))) -
        BigInt(params_.q));
  }
  return Value(t, std::move(out));
}

Value PolyDialect::ParseValue(const Type& t, std::string_view text) const {
  std::string s = Trim(text);
  if (t == IndexType()) return Value(t, ParseBigInt(s));
  if (t == RingType()) {
    if (!s.empty() && s[0] != '[') {
      return Ring(RingElem::Constant(params_, ParseBigInt(s)));
    }
    auto cs = ParseIntList(s);
    if (cs.size() != params_.degree()) {
      throw ElabError(ElabErrorKind::kBadValue,
                      "ring value needs " + std::to_string(params_.degree()) +
                          " coefficients");
    }
    return Ring(RingElem(params_, cs));
  }
  if (t == TensorType(params_.degree())) {
    auto cs = ParseIntList(s);
    if (cs.size() != params_.degree()) {
      throw ElabError(ElabErrorKind::kBadValue, "tensor length mismatch");
    }
    return Value(t, IntTensor{std::move(cs)});
  }
  throw ElabError(ElabErrorKind::kBadValue, "unknown type");
}

bool PolyDialect::Inhabits(const Type& t, const Value& v) const {
  if (!(v.type() == t) || !IsValidType(t)) return false;
  if (t == RingType()) {
    const auto* r = std::get_if<RingElem>(&v.payload());
    return r && r->params() == params_;
  }
  if (t == IndexType()) return std::holds_alternative<BigInt>(v.payload());
  const auto* tensor = std::get_if<IntTensor>(&v.payload());
  return tensor && tensor->elems.size() == params_.degree();
}

RingElem RingOracle(const std::string& op, const RingElem& a,
                    const RingElem& b) {
  if (!(a.params() == b.params())) throw IrError("oracle: parameter mismatch");
  const RingParams p = a.params();
  const std::size_t d = p.degree();
  std::vector<BigInt> full;
  if (op == "add" || op == "sub") {
    full.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      full[i] = op == "add" ? BigInt(a.coeffs()[i]) + b.coeffs()[i]
                            : BigInt(a.coeffs()[i]) - b.coeffs()[i];
    }
  } else if (op == "mul") {
    full.assign(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        full[i + j] += BigInt(a.coeffs()[i]) * b.coeffs()[j];
    // Long division by X^d + 1: the leading term c X^k (k >= d) is
    // cancelled by subtracting c X^(k-d) (X^d + 1).
    for (std::size_t k = full.size(); k-- > d;) {
      BigInt c = full[k];
      full[k] = 0;
      full[k - d] -= c;
    }
    full.resize(d);
  } else {
    throw IrError("oracle: unknown ring operation " + op);
  }
  std::vector<std::uint64_t> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    BigInt r = full[i] % p.q;
    if (r < 0) r += p.q;
    out[i] = static_cast<std::uint64_t>(r);
  }
  return RingElem(p, std::move(out));
}

const std::vector<RewriteText>& PolyRewriteTexts() {
  static const std::vector<RewriteText> kTexts = {
      {"mul_commute",
       R"({
^bb0(%p : !R, %r : !R):
  %v = poly.mul %p, %r : !R
  return %v : !R
})",
       R"({
^bb0(%p : !R, %r : !R):
  %v = poly.mul %r, %p : !R
  return %v : !R
})",
       CheckMode::kExact},
      {"add_commute",
       R"({
^bb0(%p : !R, %r : !R):
  %v = poly.add %p, %r : !R
  return %v : !R
})",
       R"({
^bb0(%p : !R, %r : !R):
  %v = poly.add %r, %p : !R
  return %v : !R
})",
       CheckMode::kExact},
      {"add_generator",
       R"({
^bb0(%a : !R):
  %one = "arith.constant"() {value = 1} : () -> index
  %two_n = "arith.constant"() {value = 2**n} : () -> index
  %x = "poly.monomial"(%one, %two_n) : (index, index) -> !R
  %oner = "poly.constant"() {value = 1} : () -> !R
  %p = "poly.add"(%x, %oner) : (!R, !R) -> !R
  %v1 = "poly.add"(%a, %p) : (!R, !R) -> !R
  "return"(%v1) : (!R) -> ()
})",
       R"({
^bb0(%a : !R):
  "return"(%a) : (!R) -> ()
})",
       CheckMode::kExact},
      {"from_to_tensor",
       R"({
^bb0(%p : !R):
  %t = poly.to_tensor %p
  %r = poly.from_tensor %t : !R
  return %r : !R
})",
       R"({
^bb0(%p : !R):
  return %p : !R
})",
       CheckMode::kExact},
      {"add_monomial_to_sub",
       R"({
^bb0(%p : !R):
  %c1 = "arith.constant"() {value = 1} : () -> index
  %e = "arith.constant"() {value = 2**n} : () -> index
  %m = "poly.monomial"(%c1, %e) : (index, index) -> !R
  %v = "poly.add"(%p, %m) : (!R, !R) -> !R
  "return"(%v) : (!R) -> ()
})",
       R"({
^bb0(%p : !R):
  %one = "poly.constant"() {value = 1} : () -> !R
  %v = "poly.sub"(%p, %one) : (!R, !R) -> !R
  "return"(%v) : (!R) -> ()
})",
       CheckMode::kExact},
  };
  return kTexts;
}

std::vector<PeepholeRewrite> PolyRewrites(const PolyDialect& d) {
  std::vector<PeepholeRewrite> out;
  for (const RewriteText& t : PolyRewriteTexts())
    out.push_back(InstantiateRewrite(d, t, d.Symbols()));
  return out;
}

}  // namespace ssair
