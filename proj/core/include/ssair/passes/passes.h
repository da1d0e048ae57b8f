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

#ifndef SSAIR_PASSES_PASSES_H_
#define SSAIR_PASSES_PASSES_H_

#include <cstdint>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"
#include "ssair/ir/morphism.h"

namespace ssair {

// Witness that `delta` is `gamma` with slot `deleted` removed.
// `strengthen` maps gamma to delta and is undefined on the deleted slot;
// `embed` maps delta back into gamma.
struct DeletionWitness {
  std::uint32_t deleted;
  Ctxt gamma;
  Ctxt delta;
  ContextMorphism strengthen;
  ContextMorphism embed;
};

DeletionWitness MakeDeletion(const Ctxt& gamma, std::uint32_t deleted);

// Rewrites a Com over w.gamma into one over w.delta. Throws IrError if the
// deleted variable is used.
Com DeleteVar(const DeletionWitness& w, const Com& com);

struct DceOptions {
  // Also drop free variables nothing reads, strengthening the context.
  bool prune_inputs = false;
};

struct DceResult {
  Ctxt ctxt;  // the strengthened context Delta
  Com com;    // a Com over ctxt
  // Delta -> Gamma. Restricting a Gamma valuation along it gives the
  // valuation the output expects.
  ContextMorphism hom;
};

// Deletes every pure binding with no remaining uses, transitively, inside
// regions too. Impure bindings are kept.
DceResult Dce(const Dialect& dialect, const Ctxt& ctxt, const Com& com,
              const DceOptions& options = {});

// Restricts a valuation of hom.to() to one of hom.from().
Valuation Restrict(const ContextMorphism& hom, const Valuation& v);

// Common subexpression elimination. Each pure binding whose opcode,
// canonical operands and regions equal an earlier binding's has its uses
// redirected to that earlier variable; the duplicate is left dead for DCE.
// Region bodies are processed independently.
Com Cse(const Dialect& dialect, const Ctxt& ctxt, const Com& com);

}  // namespace ssair

#endif  // SSAIR_PASSES_PASSES_H_
