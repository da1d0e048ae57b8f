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


// A straight-line matcher used as a baseline: it only recognizes a pattern
// whose bindings sit next to each other in the target, in the same order.

#ifndef SSAIR_TESTS_ACCEPTANCE_ADJACENCY_MATCHER_H_
#define SSAIR_TESTS_ACCEPTANCE_ADJACENCY_MATCHER_H_

#include <optional>
#include <vector>

#include "ssair/rewrite/peephole.h"

namespace ssair::testing {

// Positions p such that bindings [p - |lhs| + 1, p] of `com` instantiate
// the lhs bindings one to one.
std::vector<std::size_t> AdjacentMatches(const PeepholeRewrite& rw,
                                         const Ctxt& ctxt, const Com& com);

// Rewrites at the first adjacent match, or nullopt.
std::optional<Com> AdjacentRewrite(const Dialect& dialect,
                                   const PeepholeRewrite& rw, const Ctxt& ctxt,
                                   const Com& com);

}  // namespace ssair::testing

#endif  // SSAIR_TESTS_ACCEPTANCE_ADJACENCY_MATCHER_H_
