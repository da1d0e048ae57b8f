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

// Reference semantics over unbounded integers. Deliberately shares no code
// with the BitVec fast path: every result is computed on the mathematical
// integer and reduced into [0, 2^w) at the end.

#include "ssair/dialects/llvm.h"

namespace ssair {
namespace {

struct Ctx {
  unsigned w;
  BigInt modulus;  // 2^w
  BigInt half;     // 2^(w-1)
};

BigInt Wrap(const Ctx& c, BigInt x) {
  x %= c.modulus;
  if (x < 0) x += c.modulus;
  return x;
}

BigInt Signed(const Ctx& c, const BigInt& u) {
  return u >= c.half ? BigInt(u - c.modulus) : u;
}

BigInt Bitwise(const Ctx& c, const BigInt& a, const BigInt& b, char op) {
  BigInt out = 0;
  BigInt bit = 1;
  for (unsigned i = 0; i < c.w; ++i, bit *= 2) {
    bool x = (a / bit) % 2 == 1;
    bool y = (b / bit) % 2 == 1;
    bool r = op == '&' ? (x && y) : op == '|' ? (x || y) : (x != y);
    if (r) out += bit;
  }
  return out;
}

BigInt FloorDiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

Value OracleDenote(const Op& op, std::span<const Value> args) {
  const unsigned w = static_cast<unsigned>(op.type.param());
  Ctx c{w, BigInt(1) << w, BigInt(1) << (w - 1)};
  const std::string& n = op.name;
  auto result = [&](const BigInt& v) { return IntValue(w, Wrap(c, v)); };
  auto poison = [&] { return PoisonValue(w); };

  if (n == "llvm.mlir.constant") {
    return result(std::get<BigInt>(*op.FindAttr("value")));
  }
  if (n == "llvm.select") {
    if (args[0].IsPoison()) return poison();
    return args[0].AsBitVec().ToUnsigned() == 1 ? args[1] : args[2];
  }
  bool any_poison = false;
  for (const Value& v : args) any_poison = any_poison || v.IsPoison();
  if (any_poison) return n == "llvm.icmp" ? PoisonValue(1) : poison();

  const BigInt a = args[0].AsBitVec().ToUnsigned();
  if (n == "llvm.not") return result(c.modulus - 1 - a);
  const BigInt b = args[1].AsBitVec().ToUnsigned();
  const BigInt sa = Signed(c, a);
  const BigInt sb = Signed(c, b);

  if (n == "llvm.and") return result(Bitwise(c, a, b, '&'));
  if (n == "llvm.or") return result(Bitwise(c, a, b, '|'));
  if (n == "llvm.xor") return result(Bitwise(c, a, b, '^'));
  if (n == "llvm.add") return result(a + b);
  if (n == "llvm.sub") return result(a - b);
  if (n == "llvm.mul") return result(a * b);
  if (n == "llvm.shl" || n == "llvm.lshr" || n == "llvm.ashr") {
    if (b >= w) return poison();
    BigInt scale = BigInt(1) << static_cast<unsigned>(b);
    if (n == "llvm.shl") return result(a * scale);
    if (n == "llvm.lshr") return result(a / scale);
    return result(FloorDiv(sa, scale));
  }
  if (n == "llvm.udiv") return b == 0 ? poison() : result(a / b);
  if (n == "llvm.urem") return b == 0 ? poison() : result(a % b);
  if (n == "llvm.sdiv" || n == "llvm.srem") {
    if (sb == 0) return poison();
    BigInt q = sa / sb;
    // The quotient must be representable, else the operation overflowed.
    if (q < -c.half || q >= c.half) return poison();
    return result(n == "llvm.sdiv" ? q : BigInt(sa - q * sb));
  }
  if (n == "llvm.icmp") {
    const std::string& p = std::get<std::string>(*op.FindAttr("predicate"));
    bool r;
    if (p == "eq") r = a == b;
    else if (p == "ne") r = a != b;
    else if (p == "ugt") r = a > b;
    else if (p == "uge") r = a >= b;
    else if (p == "ult") r = a < b;
    else if (p == "ule") r = a <= b;
    else if (p == "sgt") r = sa > sb;
    else if (p == "sge") r = sa >= sb;
    else if (p == "slt") r = sa < sb;
    else if (p == "sle") r = sa <= sb;
    else throw IrError("oracle: unknown predicate " + p);
    return IntValue(1, r ? 1 : 0);
  }
  throw IrError("oracle: unknown operation " + n);
}

}  // namespace ssair
