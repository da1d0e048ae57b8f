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
// Semantic equivalence and refinement checking by enumeration or by
// seeded sampling of valuations.

#ifndef SSAIR_VERIFY_CHECK_H_
#define SSAIR_VERIFY_CHECK_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"
#include "ssair/rewrite/peephole.h"

namespace ssair {

struct Exhaustive {
  EnumLimits limits;
  // Cap on the product of the per-slot universe sizes.
  std::uint64_t max_valuations = std::uint64_t{1} << 20;
};

struct Random {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

using Strategy = std::variant<Exhaustive, Random>;

std::string ToString(const Strategy& s);

class InfeasibleStrategy : public IrError {
 public:
  using IrError::IrError;
};

// Calls `visit` on every valuation of `ctxt` in lexicographic order (slot 0
// varies slowest). Stops early when `visit` returns false. Throws
// InfeasibleStrategy when a slot is not enumerable or the product exceeds
// the cap.
void ForEachValuation(const Dialect& dialect, const Ctxt& ctxt,
                      const Exhaustive& bounds,
                      const std::function<bool(const Valuation&)>& visit);
std::vector<Valuation> EnumerateValuations(const Dialect& dialect,
                                           const Ctxt& ctxt,
                                           const Exhaustive& bounds);
// Number of valuations ForEachValuation would visit.
std::uint64_t CountValuations(const Dialect& dialect, const Ctxt& ctxt,
                              const Exhaustive& bounds);

Valuation RandomValuation(const Dialect& dialect, const Ctxt& ctxt, Rng& rng);

struct CheckSpec {
  const Dialect* dialect = nullptr;
  Ctxt ctxt;
  Com src;
  Com tgt;
  CheckMode mode = CheckMode::kExact;
  Strategy strategy = Exhaustive{};
};

struct Counterexample {
  Valuation valuation;
  Value src_value;
  Value tgt_value;
  std::size_t index = 0;  // position in visiting order

  std::string ToString() const;
};

struct CheckResult {
  std::size_t visited = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

// Both programs must be well typed over spec.ctxt with the same return
// type (IrError otherwise). Returns the first failing valuation in visiting
// order.
CheckResult Check(const CheckSpec& spec);

// Re-evaluates both programs on cex.valuation; true iff the discrepancy
// shows up again with the recorded values.
bool Replay(const CheckSpec& spec, const Counterexample& cex);

// Checks a rewrite's lhs against its rhs.
CheckResult CheckRewrite(const Dialect& dialect, const PeepholeRewrite& rw,
                         const Strategy& strategy);

}  // namespace ssair

#endif  // SSAIR_VERIFY_CHECK_H_
