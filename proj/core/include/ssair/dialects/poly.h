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

// Polynomial arithmetic over R = (Z/qZ)[X] / (X^(2^n) + 1).
//
//   !R                       ring elements
//   index                    unbounded integers (coefficients, exponents)
//   tensor<(2^n)xindex>      coefficient vectors
//
//   poly.add, poly.sub, poly.mul            (!R, !R) -> !R
//   poly.mul_constant {value = k}           (!R) -> !R
//   poly.leading_term                       (!R) -> !R
//   poly.monomial(c, i)                     (index, index) -> !R
//   poly.monomial_mul(p, i)                 (!R, index) -> !R
//   poly.to_tensor                          (!R) -> tensor
//   poly.from_tensor                        (tensor) -> !R
//   poly.constant {value = c | [c0, ...]}   () -> !R
//   arith.constant {value = c}              () -> index

#ifndef SSAIR_DIALECTS_POLY_H_
#define SSAIR_DIALECTS_POLY_H_

#include <string>
#include <vector>

#include "ssair/dialects/ring.h"
#include "ssair/ir/dialect.h"
#include "ssair/rewrite/text_rewrite.h"

namespace ssair {

Type RingType();
Type IndexType();
Type TensorType(std::size_t length);

class PolyDialect final : public Dialect {
 public:
  explicit PolyDialect(RingParams params);

  const RingParams& params() const { return params_; }
  // Symbols available to attribute expressions: q and n.
  ElabParams Symbols() const;

  std::string name() const override { return "poly"; }
  std::optional<OpSignature> Signature(const Op& op) const override;
  Value Denote(const Op& op, std::span<const Value> args,
               std::span<const RegionEvaluator> regions,
               EffectState* state) const override;
  std::string TerminatorName(bool) const override { return "return"; }
  std::optional<Type> ParseType(std::string_view text) const override;
  std::string PrintType(const Type& t) const override;
  bool IsValidType(const Type& t) const override;
  Op BuildOp(const OpSyntax& syntax) const override;
  // !R is enumerable while q^(2^n) stays within the limits.
  std::optional<std::vector<Value>> Enumerate(
      const Type& t, const EnumLimits& limits) const override;
  Value RandomValue(const Type& t, Rng& rng) const override;
  // !R accepts an integer constant or "[c0, c1, ...]".
  Value ParseValue(const Type& t, std::string_view text) const override;
  bool Inhabits(const Type& t, const Value& v) const override;

  Value Ring(const RingElem& r) const;

 private:
  RingParams params_;
};

// Reference ring arithmetic: full-degree schoolbook product over unbounded
// integers, explicit long division by X^(2^n) + 1, then reduction mod q.
// `op` is "add", "sub" or "mul".
RingElem RingOracle(const std::string& op, const RingElem& a,
                    const RingElem& b);

// The shipped rewrites, as MLIR text: mul_commute, add_commute,
// add_generator (a + (X^(2^n) + 1) -> a), from_to_tensor and
// add_monomial_to_sub (p + X^(2^n) -> p - 1).
const std::vector<RewriteText>& PolyRewriteTexts();
std::vector<PeepholeRewrite> PolyRewrites(const PolyDialect& d);

}  // namespace ssair

#endif  // SSAIR_DIALECTS_POLY_H_
