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

#ifndef SSAIR_REWRITE_ZIPPER_H_
#define SSAIR_REWRITE_ZIPPER_H_

#include <cstddef>
#include <vector>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"
#include "ssair/ir/morphism.h"

namespace ssair {

// Already-traversed bindings, Gamma => Delta. bindings.back() is the
// innermost (most recent) binding.
struct Lets {
  Ctxt gamma;
  std::vector<Expr> bindings;

  Ctxt OutCtxt() const { return ssair::OutCtxt(gamma, bindings); }
  std::size_t size() const { return bindings.size(); }
};

// A Com over Gamma opened at a binding boundary: `bot` is a Com over
// top.OutCtxt().
struct Zipper {
  Lets top;
  Com bot;
};

// Moves the first `pos` bindings into the zipper's top. Throws IrError if
// pos exceeds the number of bindings.
Zipper SplitProgramAt(std::size_t pos, const Ctxt& ctxt, const Com& com);

// Reassembles a zipper; the inverse of SplitProgramAt.
Com Zip(const Zipper& z);
Com Zip(const Lets& top, const Com& bot);

// top's bindings, then mid's bindings (mid is a Com over top.OutCtxt()),
// then bot after `retarget`, which maps top.OutCtxt() into top.OutCtxt()
// extended by mid's bindings.
Com ZipWithMiddle(const Lets& top, const Com& mid, const Com& bot,
                  const ContextMorphism& retarget);

// The valuation of top.OutCtxt() obtained by evaluating top's bindings.
Valuation ExtendValuation(const Dialect& dialect, const Lets& top,
                          const Valuation& v);

}  // namespace ssair

#endif  // SSAIR_REWRITE_ZIPPER_H_
