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


#include "ssair/verify/lint.h"

#include <set>

namespace ssair {
namespace {

// Terms over the free variables, so that equal strings denote the same
// computation on both sides.
std::vector<std::string> Terms(std::size_t num_free, const Com& com) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < num_free; ++i)
    terms.push_back("%" + std::to_string(i));
  for (const Expr& e : com.lets) {
    std::string t = e.op.name;
    for (const auto& [k, v] : e.op.attrs) t += "{" + k + "=" + AttributeToString(v) + "}";
    t += "(";
    for (std::size_t i = 0; i < e.args.size(); ++i)
      t += (i ? "," : "") + terms[e.args[i].index];
    t += ")";
    for (const Com& r : e.regions) t += "[" + DebugString(r) + "]";
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

bool IsDivRem(const std::string& n) {
  return n == "llvm.udiv" || n == "llvm.sdiv" || n == "llvm.urem" ||
         n == "llvm.srem";
}

std::vector<std::string> LintDivRemPairing(const PeepholeRewrite& rw) {
  const std::size_t k = rw.free_ctxt().size();
  auto lhs_terms = Terms(k, rw.lhs());
  auto rhs_terms = Terms(k, rw.rhs());
  std::set<std::string> available;
  for (std::size_t j = 0; j < rw.lhs().lets.size(); ++j) {
    if (IsDivRem(rw.lhs().lets[j].op.name)) available.insert(lhs_terms[k + j]);
  }
  std::vector<std::string> warnings;
  for (std::size_t j = 0; j < rw.rhs().lets.size(); ++j) {
    const Expr& e = rw.rhs().lets[j];
    if (!IsDivRem(e.op.name)) continue;
    if (!available.count(rhs_terms[k + j])) {
      warnings.push_back(rw.name() + ": rhs binding " + std::to_string(j) +
                         " (" + e.op.name +
                         ") has no lhs counterpart on the same operands");
    }
  }
  return warnings;
}

}  // namespace ssair
