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


#include "ssair/verify/registry.h"

#include <algorithm>

#include "ssair/verify/lint.h"

namespace ssair {

std::string Verdict::ToString() const {
  std::string s = std::string(passed ? "PASS" : "FAIL") + " " + name + " " +
                  strategy + " " + params + " checked=" +
                  std::to_string(visited);
  if (counterexample) s += " " + counterexample->ToString();
  if (!note.empty()) s += " (" + note + ")";
  return s;
}

std::string ParamString(const DialectConfig& c) {
  switch (c.kind) {
    case DialectKind::kLlvm:
      return c.width ? "w=" + std::to_string(*c.width) : "w=?";
    case DialectKind::kPoly:
      return "q=" + std::to_string(c.q) + ",n=" + std::to_string(c.n);
    default:
      return "-";
  }
}

Exhaustive SmallExhaustive(unsigned max_width) {
  Exhaustive e;
  e.limits.max_width = max_width;
  e.limits.max_universe = 20000;
  return e;
}

void RewriteRegistry::Add(RegistryEntry entry) {
  if (Find(entry.kind, entry.name)) {
    throw IrError("duplicate rewrite '" + entry.name + "'");
  }
  entries_.push_back(std::move(entry));
}

const RegistryEntry* RewriteRegistry::Find(DialectKind kind,
                                           const std::string& name) const {
  for (const auto& e : entries_) {
    if (e.kind == kind && e.name == name) return &e;
  }
  return nullptr;
}

std::vector<std::string> RewriteRegistry::Names(DialectKind kind) const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (e.kind == kind) out.push_back(e.name);
  }
  return out;
}

std::vector<Verdict> RewriteRegistry::Verify(DialectKind kind,
                                             const std::string& name) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({kind, name});
    if (it != cache_.end()) return it->second;
  }
  const RegistryEntry* e = Find(kind, name);
  if (!e) throw IrError("unknown rewrite '" + name + "'");
  std::vector<Verdict> out;
  for (const CheckCase& c : e->plan) {
    Verdict v;
    v.name = name;
    v.strategy = ToString(c.strategy);
    v.params = ParamString(c.config);
    try {
      DialectInstance inst = MakeDialect(c.config);
      PeepholeRewrite rw = e->make(c.config, *inst.dialect);
      CheckResult r = CheckRewrite(*inst.dialect, rw, c.strategy);
      v.visited = r.visited;
      v.counterexample = r.counterexample;
      v.passed = r.passed();
      auto lint = LintDivRemPairing(rw);
      if (!lint.empty()) {
        v.passed = false;
        v.note = lint.front();
      }
    } catch (const std::exception& ex) {
      v.passed = false;
      v.note = ex.what();
    }
    out.push_back(std::move(v));
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_[{kind, name}] = out;
  return out;
}

bool RewriteRegistry::Verified(DialectKind kind,
                               const std::string& name) const {
  auto verdicts = Verify(kind, name);
  return !verdicts.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed; });
}

PeepholeRewrite RewriteRegistry::Get(const DialectConfig& config,
                                     const Dialect& dialect,
                                     const std::string& name) const {
  const RegistryEntry* e = Find(config.kind, name);
  if (!e) {
    throw IrError("unknown rewrite '" + name + "' for dialect " +
                  ToString(config.kind));
  }
  if (e->only_width != 0 && config.width != e->only_width) {
    throw IrError("rewrite '" + name + "' only holds at width " +
                  std::to_string(e->only_width));
  }
  if (!Verified(config.kind, name)) {
    throw IrError("rewrite '" + name + "' has not passed its checks");
  }
  return e->make(config, dialect);
}

std::vector<PeepholeRewrite> RewriteRegistry::All(
    const DialectConfig& config, const Dialect& dialect) const {
  std::vector<PeepholeRewrite> out;
  for (const auto& e : entries_) {
    if (e.kind != config.kind) continue;
    if (e.only_width != 0 && config.width != e.only_width) continue;
    out.push_back(Get(config, dialect, e.name));
  }
  return out;
}

namespace {

DialectConfig Llvm(unsigned w) {
  DialectConfig c;
  c.kind = DialectKind::kLlvm;
  c.width = w;
  return c;
}

DialectConfig Poly(std::uint64_t q, unsigned n) {
  DialectConfig c;
  c.kind = DialectKind::kPoly;
  c.q = q;
  c.n = n;
  return c;
}

DialectConfig Plain(DialectKind kind) {
  DialectConfig c;
  c.kind = kind;
  return c;
}

void AddDefaults(RewriteRegistry& reg) {
  const Random kSamples{1000, 1};

  for (const LlvmRewriteText& t : LlvmRewriteTexts()) {
    RegistryEntry e;
    e.name = t.text.name;
    e.kind = DialectKind::kLlvm;
    e.only_width = t.only_width;
    e.make = [text = t.text](const DialectConfig& c, const Dialect& d) {
      ElabParams p;
      p.width = c.width;
      return InstantiateRewrite(d, text, p);
    };
    if (t.only_width != 0) {
      e.plan.push_back({Llvm(t.only_width), SmallExhaustive(t.only_width)});
    } else {
      for (unsigned w = 1; w <= 4; ++w) e.plan.push_back({Llvm(w), SmallExhaustive()});
      e.plan.push_back({Llvm(64), kSamples});
    }
    reg.Add(std::move(e));
  }

  for (const RewriteText& t : ArithRewriteTexts()) {
    for (DialectKind kind : {DialectKind::kArith, DialectKind::kScf}) {
      RegistryEntry e;
      e.name = t.name;
      e.kind = kind;
      e.make = [text = t](const DialectConfig&, const Dialect& d) {
        return InstantiateRewrite(d, text, ElabParams{});
      };
      e.plan.push_back({Plain(kind), kSamples});
      reg.Add(std::move(e));
    }
  }

  {
    RegistryEntry e;
    e.name = "iter_add_to_mul";
    e.kind = DialectKind::kScf;
    e.make = [](const DialectConfig&, const Dialect& d) {
      return IterAddToMul(dynamic_cast<const ScfDialect&>(d), 4);
    };
    e.plan.push_back({Plain(DialectKind::kScf), kSamples});
    reg.Add(std::move(e));
  }

  for (const RewriteText& t : PolyRewriteTexts()) {
    RegistryEntry e;
    e.name = t.name;
    e.kind = DialectKind::kPoly;
    e.make = [text = t](const DialectConfig&, const Dialect& d) {
      const auto& poly = dynamic_cast<const PolyDialect&>(d);
      return InstantiateRewrite(poly, text, poly.Symbols());
    };
    e.plan.push_back({Poly(7, 1), SmallExhaustive()});
    e.plan.push_back({Poly(12, 1), SmallExhaustive()});
    e.plan.push_back({Poly(3329, 4), kSamples});
    reg.Add(std::move(e));
  }
}

}  // namespace

const RewriteRegistry& DefaultRegistry() {
  static const RewriteRegistry* kRegistry = [] {
    auto* reg = new RewriteRegistry;
    AddDefaults(*reg);
    return reg;
  }();
  return *kRegistry;
}

}  // namespace ssair
