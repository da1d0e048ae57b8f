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

#include "ssair/rewrite/zipper.h"

#include <string>

#include "ssair/ir/interpreter.h"

namespace ssair {

Zipper SplitProgramAt(std::size_t pos, const Ctxt& ctxt, const Com& com) {
  if (pos > com.lets.size()) {
    throw IrError("split position " + std::to_string(pos) +
                  " exceeds the program's " +
                  std::to_string(com.lets.size()) + " bindings");
  }
  Zipper z;
  z.top.gamma = ctxt;
  z.top.bindings.assign(com.lets.begin(), com.lets.begin() + pos);
  // Absolute variable numbering means the tail needs no renumbering: its
  // context is exactly the context after the moved bindings.
  z.bot.lets.assign(com.lets.begin() + pos, com.lets.end());
  z.bot.ret = com.ret;
  return z;
}

Com Zip(const Lets& top, const Com& bot) {
  Com out;
  out.lets.reserve(top.bindings.size() + bot.lets.size());
  out.lets = top.bindings;
  out.lets.insert(out.lets.end(), bot.lets.begin(), bot.lets.end());
  out.ret = bot.ret;
  return out;
}

Com Zip(const Zipper& z) { return Zip(z.top, z.bot); }

Com ZipWithMiddle(const Lets& top, const Com& mid, const Com& bot,
                  const ContextMorphism& retarget) {
  const Ctxt delta = top.OutCtxt();
  if (!(retarget.from() == delta) ||
      !(retarget.to() == OutCtxt(delta, mid))) {
    throw IrError("retargeting morphism does not fit the zipper");
  }
  Com moved = ApplyContextMorphism(retarget, bot);
  Com out;
  out.lets.reserve(top.bindings.size() + mid.lets.size() + moved.lets.size());
  out.lets = top.bindings;
  out.lets.insert(out.lets.end(), mid.lets.begin(), mid.lets.end());
  out.lets.insert(out.lets.end(), std::make_move_iterator(moved.lets.begin()),
                  std::make_move_iterator(moved.lets.end()));
  out.ret = moved.ret;
  return out;
}

Valuation ExtendValuation(const Dialect& dialect, const Lets& top,
                          const Valuation& v) {
  return EvalLets(dialect, top.bindings, v);
}

}  // namespace ssair
