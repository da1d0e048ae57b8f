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


#include "ssair/verify/oracle.h"

#include <vector>

#include "ssair/dialects/llvm.h"
#include "ssair/verify/check.h"

namespace ssair {
namespace {

void Record(OracleReport& r, bool ok, const std::string& what) {
  ++r.checked;
  if (ok) return;
  ++r.mismatches;
  if (!r.first_mismatch) r.first_mismatch = what;
}

std::string Describe(const Op& op, std::span<const Value> args,
                     const Value& got, const Value& want) {
  std::string s = op.name;
  if (const Attribute* p = op.FindAttr("predicate")) s += " " + AttributeToString(*p);
  s += " (";
  for (std::size_t i = 0; i < args.size(); ++i)
    s += (i ? ", " : "") + args[i].ToString();
  return s + "): got " + got.ToString() + ", want " + want.ToString();
}

}  // namespace

OracleReport LlvmOracleAgreement(unsigned width, bool unary_only) {
  LlvmDialect d;
  Exhaustive bounds;
  bounds.limits.max_width = width;
  bounds.limits.max_universe = (std::uint64_t{1} << width) + 1;
  bounds.max_valuations = std::uint64_t{1} << 40;

  std::vector<Op> ops;
  for (const std::string& name : LlvmOpNames()) {
    if (unary_only && LlvmArity(name) != 1) continue;
    if (name == "llvm.icmp") {
      for (const std::string& p : IcmpPredicates()) ops.push_back(LlvmOp(name, width, p));
    } else {
      ops.push_back(LlvmOp(name, width));
    }
  }
  OracleReport report;
  for (const Op& op : ops) {
    const OpSignature sig = *d.Signature(op);
    ForEachValuation(d, Ctxt(sig.args), bounds, [&](const Valuation& v) {
      Value got = LlvmDenote(op, v.values());
      Value want = OracleDenote(op, v.values());
      Record(report, got == want,
             got == want ? std::string() : Describe(op, v.values(), got, want));
      return true;
    });
  }
  return report;
}

OracleReport RingOracleAgreement(const PolyDialect& d, std::size_t samples,
                                 std::uint64_t seed) {
  OracleReport report;
  const char* kOps[] = {"add", "sub", "mul"};
  auto check = [&](const Value& a, const Value& b) {
    for (const char* name : kOps) {
      Op op{std::string("poly.") + name, RingType(), {}};
      Value args[] = {a, b};
      Value got = d.Denote(op, args, {}, nullptr);
      Value want = d.Ring(RingOracle(name, a.AsRing(), b.AsRing()));
      Record(report, got == want,
             got == want ? std::string() : Describe(op, args, got, want));
    }
  };
  if (samples == 0) {
    auto universe = d.Enumerate(RingType(), EnumLimits{});
    if (!universe) throw InfeasibleStrategy("ring too large to enumerate");
    for (const Value& a : *universe)
      for (const Value& b : *universe) check(a, b);
  } else {
    Rng rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      Value a = d.RandomValue(RingType(), rng);
      Value b = d.RandomValue(RingType(), rng);
      check(a, b);
    }
  }
  return report;
}

}  // namespace ssair
