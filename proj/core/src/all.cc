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

#include "ssair/dialects/all.h"

namespace ssair {

std::optional<DialectKind> ParseDialectKind(std::string_view name) {
  if (name == "llvm") return DialectKind::kLlvm;
  if (name == "arith") return DialectKind::kArith;
  if (name == "scf") return DialectKind::kScf;
  if (name == "poly") return DialectKind::kPoly;
  return std::nullopt;
}

const char* ToString(DialectKind kind) {
  switch (kind) {
    case DialectKind::kLlvm: return "llvm";
    case DialectKind::kArith: return "arith";
    case DialectKind::kScf: return "scf";
    case DialectKind::kPoly: return "poly";
  }
  return "?";
}

DialectInstance MakeDialect(const DialectConfig& config) {
  DialectInstance out;
  switch (config.kind) {
    case DialectKind::kLlvm:
      if (config.width && (*config.width == 0 || *config.width > kLlvmMaxWidth)) {
        throw IrError("width must be in [1, " + std::to_string(kLlvmMaxWidth) +
                      "]");
      }
      out.dialect = std::make_shared<LlvmDialect>();
      out.params.width = config.width;
      break;
    case DialectKind::kArith:
      out.dialect = std::make_shared<ArithDialect>();
      break;
    case DialectKind::kScf:
      out.dialect = std::make_shared<ScfDialect>();
      break;
    case DialectKind::kPoly: {
      auto poly = std::make_shared<PolyDialect>(RingParams{config.q, config.n});
      out.params = poly->Symbols();
      out.dialect = std::move(poly);
      break;
    }
  }
  return out;
}

}  // namespace ssair
