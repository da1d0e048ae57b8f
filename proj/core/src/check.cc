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

#include "ssair/verify/check.h"

#include <sstream>

#include "ssair/ir/interpreter.h"
#include "ssair/ir/typecheck.h"

namespace ssair {
namespace {

std::vector<std::vector<Value>> Universes(const Dialect& dialect,
                                          const Ctxt& ctxt,
                                          const Exhaustive& bounds) {
  std::vector<std::vector<Value>> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ctxt.size(); ++i) {
    auto u = dialect.Enumerate(ctxt[i], bounds.limits);
    if (!u || u->empty()) {
      throw InfeasibleStrategy("slot " + std::to_string(i) + " of type " +
                               dialect.PrintType(ctxt[i]) +
                               " is not enumerable at these bounds");
    }
    if (total > bounds.max_valuations / u->size()) {
      throw InfeasibleStrategy("more than " +
                               std::to_string(bounds.max_valuations) +
                               " valuations");
    }
    total *= u->size();
    out.push_back(std::move(*u));
  }
  return out;
}

bool Holds(const Dialect& dialect, CheckMode mode, const Value& src,
           const Value& tgt) {
  return mode == CheckMode::kExact ? src == tgt : dialect.Refines(src, tgt);
}

}  // namespace

std::string ToString(const Strategy& s) {
  if (std::holds_alternative<Exhaustive>(s)) return "exhaustive";
  const auto& r = std::get<Random>(s);
  std::ostringstream os;
  os << "random(samples=" << r.samples << ",seed=" << r.seed << ")";
  return os.str();
}

void ForEachValuation(const Dialect& dialect, const Ctxt& ctxt,
                      const Exhaustive& bounds,
                      const std::function<bool(const Valuation&)>& visit) {
  auto universes = Universes(dialect, ctxt, bounds);
  const std::size_t k = universes.size();
  std::vector<std::size_t> digit(k, 0);
  while (true) {
    std::vector<Value> values;
    values.reserve(k);
    for (std::size_t i = 0; i < k; ++i) values.push_back(universes[i][digit[i]]);
    if (!visit(Valuation(std::move(values)))) return;
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digit[i] < universes[i].size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

std::vector<Valuation> EnumerateValuations(const Dialect& dialect,
                                           const Ctxt& ctxt,
                                           const Exhaustive& bounds) {
  std::vector<Valuation> out;
  ForEachValuation(dialect, ctxt, bounds, [&](const Valuation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::uint64_t CountValuations(const Dialect& dialect, const Ctxt& ctxt,
                              const Exhaustive& bounds) {
  std::uint64_t total = 1;
  for (const auto& u : Universes(dialect, ctxt, bounds)) total *= u.size();
  return total;
}

Valuation RandomValuation(const Dialect& dialect, const Ctxt& ctxt, Rng& rng) {
  Valuation v;
  v.Reserve(ctxt.size());
  for (const Type& t : ctxt) v.PushBack(dialect.RandomValue(t, rng));
  return v;
}

std::string Counterexample::ToString() const {
  return "inputs=" + valuation.ToString() + " src=" + src_value.ToString() +
         " tgt=" + tgt_value.ToString();
}

CheckResult Check(const CheckSpec& spec) {
  if (!spec.dialect) throw IrError("check: no dialect");
  const Dialect& d = *spec.dialect;
  CheckWellTyped(d, spec.ctxt, spec.src);
  CheckWellTyped(d, spec.ctxt, spec.tgt);
  if (!(spec.src.RetType() == spec.tgt.RetType())) {
    throw IrError("check: source and target return different types");
  }
  CheckResult result;
  auto visit = [&](const Valuation& v) {
    Value s = DenoteCom(d, spec.src, v);
    Value t = DenoteCom(d, spec.tgt, v);
    if (!Holds(d, spec.mode, s, t)) {
      result.counterexample = Counterexample{v, s, t, result.visited};
      return false;
    }
    ++result.visited;
    return true;
  };
  if (const auto* e = std::get_if<Exhaustive>(&spec.strategy)) {
    ForEachValuation(d, spec.ctxt, *e, visit);
  } else {
    const auto& r = std::get<Random>(spec.strategy);
    Rng rng(r.seed);
    for (std::size_t i = 0; i < r.samples; ++i) {
      if (!visit(RandomValuation(d, spec.ctxt, rng))) break;
    }
  }
  return result;
}

bool Replay(const CheckSpec& spec, const Counterexample& cex) {
  const Dialect& d = *spec.dialect;
  Value s = DenoteCom(d, spec.src, cex.valuation);
  Value t = DenoteCom(d, spec.tgt, cex.valuation);
  return s == cex.src_value && t == cex.tgt_value &&
         !Holds(d, spec.mode, s, t);
}

CheckResult CheckRewrite(const Dialect& dialect, const PeepholeRewrite& rw,
                         const Strategy& strategy) {
  return Check(CheckSpec{&dialect, rw.free_ctxt(), rw.lhs(), rw.rhs(),
                         rw.mode(), strategy});
}

}  // namespace ssair
