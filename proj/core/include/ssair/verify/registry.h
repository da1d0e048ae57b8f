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


// The rewrite registry. Every shipped rewrite carries a check plan, and
// the registry only hands out rewrites whose plan has passed.

#ifndef SSAIR_VERIFY_REGISTRY_H_
#define SSAIR_VERIFY_REGISTRY_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ssair/dialects/all.h"
#include "ssair/verify/check.h"

namespace ssair {

struct CheckCase {
  DialectConfig config;
  Strategy strategy;
};

// One machine-readable verdict:
//   PASS|FAIL name strategy params [counterexample]
struct Verdict {
  bool passed = false;
  std::string name;
  std::string strategy;
  std::string params;
  std::uint64_t visited = 0;
  std::optional<Counterexample> counterexample;
  std::string note;  // lint findings or infeasibility

  std::string ToString() const;
};

// "w=4", "q=7,n=1" or "-".
std::string ParamString(const DialectConfig& config);

using RewriteFactory =
    std::function<PeepholeRewrite(const DialectConfig&, const Dialect&)>;

struct RegistryEntry {
  std::string name;
  DialectKind kind = DialectKind::kLlvm;
  RewriteFactory make;
  std::vector<CheckCase> plan;
  // The rewrite only holds at this width (0: any width).
  unsigned only_width = 0;
};

class RewriteRegistry {
 public:
  // Throws IrError on a duplicate (kind, name).
  void Add(RegistryEntry entry);

  const RegistryEntry* Find(DialectKind kind, const std::string& name) const;
  std::vector<std::string> Names(DialectKind kind) const;

  // Runs the entry's plan plus the div/rem lint. Results are cached.
  std::vector<Verdict> Verify(DialectKind kind, const std::string& name) const;
  bool Verified(DialectKind kind, const std::string& name) const;

  // Instantiates a rewrite for `config`. Throws IrError when the name is
  // unknown, the plan is empty or failed, or the instance is outside the
  // rewrite's declared widths.
  PeepholeRewrite Get(const DialectConfig& config, const Dialect& dialect,
                      const std::string& name) const;
  // Every rewrite applicable at `config`.
  std::vector<PeepholeRewrite> All(const DialectConfig& config,
                                   const Dialect& dialect) const;

 private:
  std::vector<RegistryEntry> entries_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<DialectKind, std::string>, std::vector<Verdict>>
      cache_;
};

// Exhaustive bounds used for LLVM widths up to 4 and small rings.
Exhaustive SmallExhaustive(unsigned max_width = 4);

// The shipped rewrites of all dialects with their plans: LLVM exhaustive
// at widths 1-4 and 1000 samples at width 64; poly exhaustive at (7, 1)
// and (12, 1) and sampled at (3329, 4); arith and scf sampled.
const RewriteRegistry& DefaultRegistry();

}  // namespace ssair

#endif  // SSAIR_VERIFY_REGISTRY_H_
