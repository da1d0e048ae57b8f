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


// Differential checks of dialect semantics against the reference
// implementations.

#ifndef SSAIR_VERIFY_ORACLE_H_
#define SSAIR_VERIFY_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "ssair/dialects/poly.h"

namespace ssair {

struct OracleReport {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first_mismatch;
};

// Every op (icmp with every predicate) on every operand combination at
// `width`, poison included. With unary_only, just llvm.not.
OracleReport LlvmOracleAgreement(unsigned width, bool unary_only = false);

// poly.add/sub/mul against RingOracle on all pairs of ring elements, or on
// `samples` random pairs when samples != 0.
OracleReport RingOracleAgreement(const PolyDialect& d, std::size_t samples = 0,
                                 std::uint64_t seed = 1);

}  // namespace ssair

#endif  // SSAIR_VERIFY_ORACLE_H_
