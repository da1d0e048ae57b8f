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


#include "adjacency_matcher.h"

namespace ssair::testing {
namespace {

bool WindowMatches(const PeepholeRewrite& rw, const Ctxt& ctxt, const Com& com,
                   std::size_t start) {
  const Com& lhs = rw.lhs();
  const std::size_t nfree = rw.free_ctxt().size();
  std::vector<std::optional<std::uint32_t>> sigma(nfree);
  for (std::size_t k = 0; k < lhs.lets.size(); ++k) {
    const Expr& p = lhs.lets[k];
    const Expr& t = com.lets[start + k];
    if (!(p.op == t.op) || !(p.ty == t.ty) || p.args.size() != t.args.size() ||
        !(p.regions == t.regions)) {
      return false;
    }
    for (std::size_t a = 0; a < p.args.size(); ++a) {
      const std::uint32_t pv = p.args[a].index;
      const std::uint32_t tv = t.args[a].index;
      if (pv < nfree) {
        if (!(rw.free_ctxt()[pv] == t.args[a].ty)) return false;
        if (sigma[pv] && *sigma[pv] != tv) return false;
        sigma[pv] = tv;
      } else if (tv != ctxt.size() + start + (pv - nfree)) {
        return false;
      }
    }
  }
  return lhs.ret.index == nfree + lhs.lets.size() - 1;
}

}  // namespace

std::vector<std::size_t> AdjacentMatches(const PeepholeRewrite& rw,
                                         const Ctxt& ctxt, const Com& com) {
  std::vector<std::size_t> out;
  const std::size_t len = rw.lhs().lets.size();
  if (len == 0 || len > com.lets.size()) return out;
  for (std::size_t start = 0; start + len <= com.lets.size(); ++start)
    if (WindowMatches(rw, ctxt, com, start)) out.push_back(start + len - 1);
  return out;
}

std::optional<Com> AdjacentRewrite(const Dialect& dialect,
                                   const PeepholeRewrite& rw, const Ctxt& ctxt,
                                   const Com& com) {
  auto matches = AdjacentMatches(rw, ctxt, com);
  if (matches.empty()) return std::nullopt;
  // An adjacent window is also a def-use match, so the splice is shared.
  return TryRewritePeepholeAt(dialect, rw, matches.front(), ctxt, com);
}

}  // namespace ssair::testing
