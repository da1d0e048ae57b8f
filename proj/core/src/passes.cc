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

#include "ssair/passes/passes.h"

#include <unordered_map>

namespace ssair {
namespace {

bool IsPure(const Dialect& dialect, const Op& op) {
  auto sig = dialect.Signature(op);
  return sig && sig->effect == EffectKind::kPure;
}

std::vector<RegionSig> RegionSigs(const Dialect& dialect, const Expr& e) {
  auto sig = dialect.Signature(e.op);
  if (!sig || sig->regions.size() != e.regions.size()) {
    throw IrError("cannot resolve region signature of " + e.op.name);
  }
  return sig->regions;
}

// Deletes dead pure bindings of `com` in place; regions first.
void DceBindings(const Dialect& dialect, const Ctxt& ctxt, Com& com) {
  for (Expr& e : com.lets) {
    if (e.regions.empty()) continue;
    auto sigs = RegionSigs(dialect, e);
    for (std::size_t r = 0; r < e.regions.size(); ++r)
      DceBindings(dialect, sigs[r].entry, e.regions[r]);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> uses = UseCounts(ctxt, com);
    for (std::size_t k = com.lets.size(); k-- > 0;) {
      const std::uint32_t x = ctxt.size() + k;
      if (uses[x] != 0 || !IsPure(dialect, com.lets[k].op)) continue;
      for (const Var& a : com.lets[k].args) --uses[a.index];
      // Remove slot x from the context of the tail: bindings after k see
      // one fewer variable.
      Ctxt before = OutCtxt(ctxt, std::vector<Expr>(com.lets.begin(),
                                                    com.lets.begin() + k + 1));
      DeletionWitness w = MakeDeletion(before, x);
      Com tail;
      tail.lets.assign(com.lets.begin() + k + 1, com.lets.end());
      tail.ret = com.ret;
      Com moved = DeleteVar(w, tail);
      com.lets.resize(k);
      com.lets.insert(com.lets.end(), moved.lets.begin(), moved.lets.end());
      com.ret = moved.ret;
      uses.erase(uses.begin() + x);
      changed = true;
    }
  }
}

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return HashValue(e); }
};

Com CseImpl(const Dialect& dialect, const Ctxt& ctxt, const Com& com) {
  std::vector<Var> canon;
  canon.reserve(ctxt.size() + com.lets.size());
  for (std::uint32_t i = 0; i < ctxt.size(); ++i)
    canon.push_back(Var{i, ctxt[i]});

  std::unordered_map<Expr, std::uint32_t, ExprHash> seen;
  Com out;
  out.lets.reserve(com.lets.size());
  for (std::size_t k = 0; k < com.lets.size(); ++k) {
    const std::uint32_t x = ctxt.size() + k;
    Expr e = com.lets[k];
    for (Var& a : e.args) a = canon[a.index];
    if (!e.regions.empty()) {
      auto sigs = RegionSigs(dialect, e);
      for (std::size_t r = 0; r < e.regions.size(); ++r)
        e.regions[r] = CseImpl(dialect, sigs[r].entry, e.regions[r]);
    }
    Var self{x, e.ty};
    if (IsPure(dialect, e.op)) {
      auto [it, inserted] = seen.try_emplace(e, x);
      canon.push_back(inserted ? self : Var{it->second, e.ty});
    } else {
      canon.push_back(self);
    }
    out.lets.push_back(std::move(e));
  }
  out.ret = canon[com.ret.index];
  return out;
}

}  // namespace

DeletionWitness MakeDeletion(const Ctxt& gamma, std::uint32_t deleted) {
  if (deleted >= gamma.size()) throw IrError("deleted slot out of range");
  std::vector<Type> rest;
  for (std::uint32_t i = 0; i < gamma.size(); ++i)
    if (i != deleted) rest.push_back(gamma[i]);
  Ctxt delta(std::move(rest));
  ContextMorphism strengthen(gamma, delta);
  ContextMorphism embed(delta, gamma);
  for (std::uint32_t i = 0; i < gamma.size(); ++i) {
    if (i == deleted) continue;
    std::uint32_t j = i < deleted ? i : i - 1;
    strengthen.Set(i, j);
    embed.Set(j, i);
  }
  return DeletionWitness{deleted, gamma, std::move(delta),
                         std::move(strengthen), std::move(embed)};
}

Com DeleteVar(const DeletionWitness& w, const Com& com) {
  return ApplyContextMorphism(w.strengthen, com);
}

Valuation Restrict(const ContextMorphism& hom, const Valuation& v) {
  if (v.size() != hom.to().size()) {
    throw IrError("valuation does not match the morphism's target context");
  }
  std::vector<Value> out;
  out.reserve(hom.from().size());
  for (std::uint32_t i = 0; i < hom.from().size(); ++i) {
    auto j = hom.Lookup(i);
    if (!j) throw IrError("cannot restrict along a partial morphism");
    out.push_back(v[*j]);
  }
  return Valuation(std::move(out));
}

DceResult Dce(const Dialect& dialect, const Ctxt& ctxt, const Com& com,
              const DceOptions& options) {
  Com cur = com;
  DceBindings(dialect, ctxt, cur);

  Ctxt delta = ctxt;
  // hom_index[i] is the Gamma slot that Delta slot i came from.
  std::vector<std::uint32_t> hom_index(ctxt.size());
  for (std::uint32_t i = 0; i < ctxt.size(); ++i) hom_index[i] = i;
  if (options.prune_inputs) {
    for (std::size_t i = ctxt.size(); i-- > 0;) {
      if (UseCounts(delta, cur)[i] != 0) continue;
      DeletionWitness w = MakeDeletion(delta, i);
      cur = DeleteVar(w, cur);
      delta = w.delta;
      hom_index.erase(hom_index.begin() + i);
    }
  }
  ContextMorphism hom(delta, ctxt);
  for (std::uint32_t i = 0; i < delta.size(); ++i) hom.Set(i, hom_index[i]);
  return DceResult{std::move(delta), std::move(cur), std::move(hom)};
}

Com Cse(const Dialect& dialect, const Ctxt& ctxt, const Com& com) {
  return CseImpl(dialect, ctxt, com);
}

}  // namespace ssair
