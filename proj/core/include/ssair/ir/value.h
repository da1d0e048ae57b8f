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

#ifndef SSAIR_IR_VALUE_H_
#define SSAIR_IR_VALUE_H_

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ssair/dialects/ring.h"
#include "ssair/ir/bitvec.h"
#include "ssair/ir/type.h"

namespace ssair {

struct Poison {
  friend bool operator==(Poison, Poison) { return true; }
};

// Coefficient vector produced by to_tensor.
struct IntTensor {
  std::vector<BigInt> elems;
  friend bool operator==(const IntTensor&, const IntTensor&) = default;
};

// The union of every shipped dialect's value universe.
using Payload =
    std::variant<Poison, BitVec, BigInt, bool, RingElem, IntTensor>;

// A runtime value tagged with its IR type. Accessors throw IrError on a
// payload kind mismatch instead of coercing.
class Value {
 public:
  Value() = default;
  Value(Type ty, Payload payload)
      : ty_(std::move(ty)), payload_(std::move(payload)) {}

  const Type& type() const { return ty_; }
  const Payload& payload() const { return payload_; }

  bool IsPoison() const { return std::holds_alternative<Poison>(payload_); }
  const BitVec& AsBitVec() const;
  const BigInt& AsInt() const;
  bool AsBool() const;
  const RingElem& AsRing() const;
  const IntTensor& AsTensor() const;

  std::string ToString() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Type ty_;
  Payload payload_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);
std::size_t HashValue(const Value& v);

// Values for each slot of a context, in order.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::vector<Value> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const Value& operator[](std::size_t i) const { return values_[i]; }
  const std::vector<Value>& values() const { return values_; }

  Valuation Snoc(Value v) const {
    Valuation out = *this;
    out.values_.push_back(std::move(v));
    return out;
  }
  void PushBack(Value v) { values_.push_back(std::move(v)); }
  void Reserve(std::size_t n) { values_.reserve(n); }

  // The typed lookup used by the interpreter: index and type must agree.
  const Value& Lookup(const Var& v) const;

  // true iff the valuation matches `ctxt` slot by slot.
  bool Inhabits(const Ctxt& ctxt) const;

  std::string ToString() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Value> values_;
};

}  // namespace ssair

#endif  // SSAIR_IR_VALUE_H_
