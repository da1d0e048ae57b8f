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

#ifndef SSAIR_IR_MORPHISM_H_
#define SSAIR_IR_MORPHISM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ssair/ir/com.h"

namespace ssair {

// A (possibly partial) map from the variables of one context to those of
// another. Applying it to a Com over `from` yields a Com over `to`.
class ContextMorphism {
 public:
  ContextMorphism(Ctxt from, Ctxt to);

  static ContextMorphism Identity(const Ctxt& ctxt);
  // The inclusion of `ctxt` into `ctxt` extended by more slots.
  static ContextMorphism Weaken(const Ctxt& ctxt, const Ctxt& extended);

  const Ctxt& from() const { return from_; }
  const Ctxt& to() const { return to_; }

  // Throws IrError if the target slot's type differs.
  void Set(std::uint32_t from_index, std::uint32_t to_index);
  std::optional<std::uint32_t> Lookup(std::uint32_t from_index) const {
    return map_[from_index];
  }
  bool IsTotal() const;

  // Maps a variable of `from`; throws IrError if unmapped.
  Var Apply(const Var& v) const;

 private:
  Ctxt from_;
  Ctxt to_;
  std::vector<std::optional<std::uint32_t>> map_;
};

// Remaps every free-variable occurrence of `com` (a Com over hom.from())
// and shifts its bound variables so the result is a Com over hom.to().
// Throws IrError if `com` uses a variable the morphism leaves unmapped.
Com ApplyContextMorphism(const ContextMorphism& hom, const Com& com);

// Operand occurrences per variable of `com` (free variables first, then one
// slot per binding). The returned variable counts as a use. Region bodies
// are closed, so uses inside them belong to the region's own context and
// are not counted here.
std::vector<std::size_t> UseCounts(const Ctxt& ctxt, const Com& com);

// Same, for a Com over a context of `ctxt_size` slots.
std::vector<std::size_t> UseCounts(std::size_t ctxt_size, const Com& com);

}  // namespace ssair

#endif  // SSAIR_IR_MORPHISM_H_
