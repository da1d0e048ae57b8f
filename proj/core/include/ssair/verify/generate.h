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


// Random well-typed programs for property tests.

#ifndef SSAIR_VERIFY_GENERATE_H_
#define SSAIR_VERIFY_GENERATE_H_

#include <cstddef>
#include <span>

#include "ssair/dialects/all.h"

namespace ssair {

struct GenOptions {
  std::size_t max_bindings = 30;  // top level; the count is uniform in [1, max]
  unsigned region_depth = 2;      // scf nesting
  unsigned width = 4;             // llvm
  // Per top-level step: splice in the lhs of one of the given rewrites
  // over randomly chosen existing variables.
  double plant_rate = 0.0;
  // Per top-level step: add a binding nothing will read (possibly reading
  // an earlier injected one), or an exact copy of an earlier pure binding
  // that later code reads instead of the original.
  double dead_rate = 0.0;
  double dup_rate = 0.0;
};

struct GeneratedProgram {
  Ctxt ctxt;
  Com com;
  // `com` without the injected dead and duplicate bindings, uses of a
  // duplicate reading the original instead.
  Com clean;
  std::size_t dead_injected = 0;
  std::size_t dups_injected = 0;
  std::size_t planted = 0;
};

// Loop trip counts are kept small and multiplication always has a
// constant operand, so evaluation stays cheap.
GeneratedProgram GenerateProgram(DialectKind kind, const Dialect& dialect,
                                 const GenOptions& options, Rng& rng,
                                 std::span<const PeepholeRewrite> plant = {});

}  // namespace ssair

#endif  // SSAIR_VERIFY_GENERATE_H_
