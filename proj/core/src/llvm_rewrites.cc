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

#include <vector>

#include "ssair/dialects/llvm.h"

namespace ssair {

const std::vector<LlvmRewriteText>& LlvmRewriteTexts() {
  static const std::vector<LlvmRewriteText> kTexts = {
      {{"xor_sub_self",
        R"({
^bb0(%x : i_, %y : i_):
  %a = llvm.sub %x, %x : i_
  %b = llvm.xor %a, %y : i_
  llvm.return %b : i_
})",
        R"({
^bb0(%x : i_, %y : i_):
  llvm.return %y : i_
})",
        CheckMode::kRefine},
       0},
      {{"and_or_add",
        R"({
^bb0(%a : i_, %b : i_):
  %c = llvm.and %b, %a : i_
  %d = llvm.or %b, %a : i_
  %e = llvm.add %c, %d : i_
  llvm.return %e : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %f = llvm.add %b, %a : i_
  llvm.return %f : i_
})",
        CheckMode::kExact},
       0},
      {{"add_zero",
        R"({
^bb0(%x : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  %r = llvm.add %x, %z : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"sub_self",
        R"({
^bb0(%x : i_):
  %r = llvm.sub %x, %x : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  llvm.return %z : i_
})",
        CheckMode::kRefine},
       0},
      {{"xor_self",
        R"({
^bb0(%x : i_):
  %r = llvm.xor %x, %x : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  llvm.return %z : i_
})",
        CheckMode::kRefine},
       0},
      {{"and_self",
        R"({
^bb0(%x : i_):
  %r = llvm.and %x, %x : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"or_self",
        R"({
^bb0(%x : i_):
  %r = llvm.or %x, %x : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"mul_one",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(1 : i_) : i_
  %r = llvm.mul %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"mul_zero",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(0 : i_) : i_
  %r = llvm.mul %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  llvm.return %z : i_
})",
        CheckMode::kRefine},
       0},
      {{"add_commute",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.add %a, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.add %b, %a : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"sub_to_add_neg",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.sub %a, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  %n = llvm.sub %z, %b : i_
  %r = llvm.add %a, %n : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"not_not",
        R"({
^bb0(%x : i_):
  %a = llvm.not %x : i_
  %b = llvm.not %a : i_
  llvm.return %b : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"add_sub_cancel",
        R"({
^bb0(%a : i_, %b : i_):
  %s = llvm.add %a, %b : i_
  %r = llvm.sub %s, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  llvm.return %a : i_
})",
        CheckMode::kRefine},
       0},
      {{"sub_add_cancel",
        R"({
^bb0(%a : i_, %b : i_):
  %s = llvm.sub %a, %b : i_
  %r = llvm.add %s, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  llvm.return %a : i_
})",
        CheckMode::kRefine},
       0},
      {{"xor_xor_cancel",
        R"({
^bb0(%a : i_, %b : i_):
  %s = llvm.xor %a, %b : i_
  %r = llvm.xor %s, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  llvm.return %a : i_
})",
        CheckMode::kRefine},
       0},
      {{"or_and_absorb",
        R"({
^bb0(%a : i_, %b : i_):
  %s = llvm.and %a, %b : i_
  %r = llvm.or %a, %s : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  llvm.return %a : i_
})",
        CheckMode::kRefine},
       0},
      {{"and_or_absorb",
        R"({
^bb0(%a : i_, %b : i_):
  %s = llvm.or %a, %b : i_
  %r = llvm.and %a, %s : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  llvm.return %a : i_
})",
        CheckMode::kRefine},
       0},
      {{"demorgan_and",
        R"({
^bb0(%a : i_, %b : i_):
  %s = llvm.and %a, %b : i_
  %r = llvm.not %s : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %na = llvm.not %a : i_
  %nb = llvm.not %b : i_
  %r = llvm.or %na, %nb : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"add_self_to_mul2",
        R"({
^bb0(%x : i_):
  %r = llvm.add %x, %x : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(2 : i_) : i_
  %r = llvm.mul %x, %c : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"neg_neg",
        R"({
^bb0(%x : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  %a = llvm.sub %z, %x : i_
  %b = llvm.sub %z, %a : i_
  llvm.return %b : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"mul_neg_neg",
        R"({
^bb0(%a : i_, %b : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  %na = llvm.sub %z, %a : i_
  %nb = llvm.sub %z, %b : i_
  %r = llvm.mul %na, %nb : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.mul %a, %b : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"or_sub_and_to_xor",
        R"({
^bb0(%a : i_, %b : i_):
  %o = llvm.or %a, %b : i_
  %n = llvm.and %a, %b : i_
  %r = llvm.sub %o, %n : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.xor %a, %b : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"udiv_one",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(1 : i_) : i_
  %r = llvm.udiv %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"urem_one",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(1 : i_) : i_
  %r = llvm.urem %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  %z = llvm.mlir.constant(0 : i_) : i_
  llvm.return %z : i_
})",
        CheckMode::kRefine},
       0},
      {{"udiv_double",
        R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.udiv %a, %b : i_
  %r = llvm.add %q, %q : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %q = llvm.udiv %a, %b : i_
  %c = llvm.mlir.constant(2 : i_) : i_
  %r = llvm.mul %q, %c : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       0},
      {{"shl_zero",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(0 : i_) : i_
  %r = llvm.shl %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"lshr_zero",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(0 : i_) : i_
  %r = llvm.lshr %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"ashr_zero",
        R"({
^bb0(%x : i_):
  %c = llvm.mlir.constant(0 : i_) : i_
  %r = llvm.ashr %x, %c : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%x : i_):
  llvm.return %x : i_
})",
        CheckMode::kExact},
       0},
      {{"select_same",
        R"({
^bb0(%c : i1, %x : i_):
  %r = llvm.select %c, %x, %x : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%c : i1, %x : i_):
  llvm.return %x : i_
})",
        CheckMode::kRefine},
       0},
      {{"select_true",
        R"({
^bb0(%a : i_, %b : i_):
  %t = llvm.mlir.constant(1 : i1) : i1
  %r = llvm.select %t, %a, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  llvm.return %a : i_
})",
        CheckMode::kExact},
       0},
      {{"icmp_eq_self",
        R"({
^bb0(%x : i_):
  %r = llvm.icmp "eq" %x, %x : i_
  llvm.return %r : i1
})",
        R"({
^bb0(%x : i_):
  %t = llvm.mlir.constant(1 : i1) : i1
  llvm.return %t : i1
})",
        CheckMode::kRefine},
       0},
      {{"add_to_xor_i1",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.add %a, %b : i_
  llvm.return %r : i_
})",
        R"({
^bb0(%a : i_, %b : i_):
  %r = llvm.xor %a, %b : i_
  llvm.return %r : i_
})",
        CheckMode::kExact},
       1},
  };
  return kTexts;
}

std::vector<PeepholeRewrite> LlvmRewrites(const LlvmDialect& d,
                                          unsigned width) {
  ElabParams params;
  params.width = width;
  std::vector<PeepholeRewrite> out;
  for (const LlvmRewriteText& t : LlvmRewriteTexts()) {
    if (t.only_width != 0 && t.only_width != width) continue;
    out.push_back(InstantiateRewrite(d, t.text, params));
  }
  return out;
}

}  // namespace ssair
