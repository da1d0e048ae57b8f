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
// Selects and configures one of the shipped dialects by name.

#ifndef SSAIR_DIALECTS_ALL_H_
#define SSAIR_DIALECTS_ALL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ssair/dialects/arith.h"
#include "ssair/dialects/llvm.h"
#include "ssair/dialects/poly.h"
#include "ssair/dialects/scf.h"

namespace ssair {

enum class DialectKind { kLlvm, kArith, kScf, kPoly };

std::optional<DialectKind> ParseDialectKind(std::string_view name);
const char* ToString(DialectKind kind);

struct DialectConfig {
  DialectKind kind = DialectKind::kLlvm;
  std::optional<unsigned> width;  // resolves i_ (llvm)
  std::uint64_t q = 7;            // poly
  unsigned n = 1;                 // poly
};

struct DialectInstance {
  std::shared_ptr<const Dialect> dialect;
  ElabParams params;
};

// Throws IrError on invalid parameters.
DialectInstance MakeDialect(const DialectConfig& config);

}  // namespace ssair

#endif  // SSAIR_DIALECTS_ALL_H_
