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

#ifndef SSAIR_IR_DIALECT_H_
#define SSAIR_IR_DIALECT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssair/ir/com.h"
#include "ssair/ir/value.h"

namespace ssair {

class Dialect;

// Opaque state threaded through impure operations. Pure operations never
// see it.
class EffectState {
 public:
  virtual ~EffectState() = default;
};

// A region body packaged as a function from an entry valuation to a value.
// The owning operation's denotation decides how often to call it.
class RegionEvaluator {
 public:
  RegionEvaluator(const Dialect& dialect, const Com& body, const Ctxt& entry,
                  EffectState* state)
      : dialect_(&dialect), body_(&body), entry_(&entry), state_(state) {}

  Value operator()(const Valuation& entry) const;
  Value operator()(std::vector<Value> entry) const {
    return (*this)(Valuation(std::move(entry)));
  }
  const Ctxt& entry_ctxt() const { return *entry_; }

 private:
  const Dialect* dialect_;
  const Com* body_;
  const Ctxt* entry_;
  EffectState* state_;
};

// Raised by dialect hooks while turning surface syntax into IR.
enum class ElabErrorKind {
  kUnknownOp,
  kMalformedAttr,
  kTerminator,
  kUnresolvedWidth,
  kUnknownType,
  kTypeMismatch,
  kRegionSignature,
  kBadValue,
};

const char* ToString(ElabErrorKind kind);

class ElabError : public std::runtime_error {
 public:
  ElabError(ElabErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ElabErrorKind kind() const { return kind_; }

 private:
  ElabErrorKind kind_;
};

// Parameters supplied at elaboration: the width substituted for `i_` and the
// symbols usable in attribute expressions such as `2**n`.
struct ElabParams {
  std::optional<unsigned> width;
  std::map<std::string, BigInt> symbols;
};

// What the elaborator knows about one operation when asking the dialect to
// build its opcode.
struct OpSyntax {
  std::string name;
  std::vector<Type> operand_types;
  std::map<std::string, Attribute> attrs;
  // Types written after attribute values, as in `{value = 3 : i8}`.
  std::map<std::string, Type> attr_types;
  // From a function-type annotation `(a, b) -> c`.
  std::optional<std::vector<Type>> input_types;
  // The annotated result type, from `: T` or `-> T`.
  std::optional<Type> result_type;
  // The annotation was a lone `: T` (pretty form) rather than a function
  // type. Some pretty forms annotate an operand type there instead.
  bool short_type = false;
  std::size_t num_regions = 0;
};

// Bounds on exhaustive enumeration of a type's value universe.
struct EnumLimits {
  unsigned max_width = 8;
  std::uint64_t max_universe = 20000;
};

using Rng = std::mt19937_64;

// A dialect: its types, values, operation signatures and denotations, plus
// the surface-syntax hooks the elaborator and printer call.
class Dialect {
 public:
  virtual ~Dialect() = default;

  virtual std::string name() const = 0;

  // nullopt for opcodes this dialect does not define.
  virtual std::optional<OpSignature> Signature(const Op& op) const = 0;

  // Operands already match Signature(op).args.
  virtual Value Denote(const Op& op, std::span<const Value> args,
                       std::span<const RegionEvaluator> regions,
                       EffectState* state) const = 0;

  virtual std::string TerminatorName(bool in_region) const = 0;
  virtual bool IsTerminator(std::string_view op_name) const {
    return op_name == TerminatorName(false) || op_name == TerminatorName(true);
  }

  // Parses a type spelling; may return a symbolic type (e.g. `i_`).
  virtual std::optional<Type> ParseType(std::string_view text) const = 0;
  virtual std::string PrintType(const Type& t) const = 0;
  // true for concrete types this dialect knows.
  virtual bool IsValidType(const Type& t) const = 0;

  // Builds the opcode for one parsed operation; throws ElabError.
  virtual Op BuildOp(const OpSyntax& syntax) const = 0;

  // The full value universe of `t`, or nullopt when it is infinite or
  // larger than `limits` permit.
  virtual std::optional<std::vector<Value>> Enumerate(
      const Type& t, const EnumLimits& limits) const = 0;
  virtual Value RandomValue(const Type& t, Rng& rng) const = 0;
  // Parses a runtime value for command-line input; throws ElabError.
  virtual Value ParseValue(const Type& t, std::string_view text) const = 0;
  virtual bool Inhabits(const Type& t, const Value& v) const = 0;

  // Semantic refinement of a source value by a target value. Exact
  // equality unless the dialect has a more permissive order.
  virtual bool Refines(const Value& src, const Value& tgt) const {
    return src == tgt;
  }
};

// Uniform draw in [0, bound) that only depends on the engine's output
// sequence, so seeded runs reproduce across standard libraries.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace ssair

#endif  // SSAIR_IR_DIALECT_H_
