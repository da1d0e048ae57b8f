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

#ifndef SSAIR_DIALECTS_RING_H_
#define SSAIR_DIALECTS_RING_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ssair/ir/bitvec.h"

namespace ssair {

// Parameters of R = (Z/qZ)[X] / (X^(2^n) + 1).
struct RingParams {
  std::uint64_t q = 2;
  unsigned n = 0;

  std::size_t degree() const { return std::size_t{1} << n; }  // 2^n
  friend bool operator==(const RingParams&, const RingParams&) = default;
};

// An element of R, stored as the coefficient vector of its unique
// representative of degree < 2^n. coeffs()[i] is the coefficient of X^i and
// lies in [0, q).
class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(RingParams p);  // zero
  // Coefficients are reduced mod q; the vector must have length 2^n.
  RingElem(RingParams p, const std::vector<BigInt>& coeffs);
  RingElem(RingParams p, std::vector<std::uint64_t> reduced_coeffs);

  static RingElem Constant(RingParams p, const BigInt& c);
  // The class of c * X^i. X has order 2 * 2^n, so any integer i is valid.
  static RingElem Monomial(RingParams p, const BigInt& c, const BigInt& i);

  const RingParams& params() const { return params_; }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }
  bool IsZero() const;

  RingElem Add(const RingElem& o) const;
  RingElem Sub(const RingElem& o) const;
  RingElem Neg() const;
  // Negacyclic schoolbook product.
  RingElem Mul(const RingElem& o) const;
  RingElem Scale(const BigInt& k) const;
  RingElem MulMonomial(const BigInt& i) const;
  // The class of the highest-degree nonzero term of the representative;
  // zero for the zero element.
  RingElem LeadingTerm() const;

  std::string ToString() const;  // "[c0, c1, ...]"

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  void CheckCompatible(const RingElem& o) const;

  RingParams params_;
  std::vector<std::uint64_t> coeffs_;
};

std::size_t HashValue(const RingElem& r);

// Reduces an arbitrary integer into [0, q).
std::uint64_t ReduceMod(const BigInt& v, std::uint64_t q);

}  // namespace ssair

#endif  // SSAIR_DIALECTS_RING_H_
