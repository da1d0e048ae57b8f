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

#include "ssair/ir/morphism.h"

#include <string>

namespace ssair {

ContextMorphism::ContextMorphism(Ctxt from, Ctxt to)
    : from_(std::move(from)), to_(std::move(to)), map_(from_.size()) {}

ContextMorphism ContextMorphism::Identity(const Ctxt& ctxt) {
  return Weaken(ctxt, ctxt);
}

ContextMorphism ContextMorphism::Weaken(const Ctxt& ctxt,
                                        const Ctxt& extended) {
  ContextMorphism hom(ctxt, extended);
  for (std::uint32_t i = 0; i < ctxt.size(); ++i) hom.Set(i, i);
  return hom;
}

void ContextMorphism::Set(std::uint32_t from_index, std::uint32_t to_index) {
  if (from_index >= from_.size() || to_index >= to_.size()) {
    throw IrError("context morphism index out of range");
  }
  if (!(from_[from_index] == to_[to_index])) {
    throw IrError("context morphism must preserve types: %" +
                  std::to_string(from_index) + " : " +
                  DebugString(from_[from_index]) + " mapped to %" +
                  std::to_string(to_index) + " : " +
                  DebugString(to_[to_index]));
  }
  map_[from_index] = to_index;
}

bool ContextMorphism::IsTotal() const {
  for (const auto& m : map_)
    if (!m) return false;
  return true;
}

Var ContextMorphism::Apply(const Var& v) const {
  if (v.index >= from_.size() || !map_[v.index]) {
    throw IrError("context morphism is undefined on %" +
                  std::to_string(v.index));
  }
  if (!(from_[v.index] == v.ty)) {
    throw IrError("variable %" + std::to_string(v.index) +
                  " does not match the morphism's source context");
  }
  return Var{*map_[v.index], v.ty};
}

Com ApplyContextMorphism(const ContextMorphism& hom, const Com& com) {
  const std::uint32_t from_size = hom.from().size();
  const std::uint32_t to_size = hom.to().size();
  auto remap = [&](const Var& v) -> Var {
    if (v.index < from_size) return hom.Apply(v);
    return Var{v.index - from_size + to_size, v.ty};
  };
  Com out;
  out.lets.reserve(com.lets.size());
  for (const Expr& e : com.lets) {
    Expr ne = e;
    for (Var& a : ne.args) a = remap(a);
    out.lets.push_back(std::move(ne));
  }
  out.ret = remap(com.ret);
  return out;
}

std::vector<std::size_t> UseCounts(std::size_t ctxt_size, const Com& com) {
  std::vector<std::size_t> counts(ctxt_size + com.lets.size(), 0);
  for (const Expr& e : com.lets)
    for (const Var& a : e.args)
      if (a.index < counts.size()) ++counts[a.index];
  if (com.ret.index < counts.size()) ++counts[com.ret.index];
  return counts;
}

std::vector<std::size_t> UseCounts(const Ctxt& ctxt, const Com& com) {
  return UseCounts(ctxt.size(), com);
}

}  // namespace ssair
