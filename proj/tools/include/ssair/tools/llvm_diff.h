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


// Differential testing of the llvm dialect against a real LLVM optimizer:
// every single-op program with constant inputs is written out as LLVM IR,
// constant-folded by the external tool, and the folded result compared
// with LlvmDenote.

#ifndef SSAIR_TOOLS_LLVM_DIFF_H_
#define SSAIR_TOOLS_LLVM_DIFF_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssair/dialects/llvm.h"

namespace ssair::tools {

class ToolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exit status for "external tool not available".
inline constexpr int kSkipExitCode = 77;

// `explicit_path` if non-empty, else $SSAIR_OPT, else `opt` on PATH.
// nullopt when none of them names an executable file.
std::optional<std::string> FindOptTool(const std::string& explicit_path);

struct LlvmDiffOptions {
  std::string tool;  // an `opt` binary, or a `clang` that accepts -x ir
  std::vector<unsigned> unary_widths = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<unsigned> binary_widths = {1, 2, 3, 4};
};

struct LlvmDiffReport {
  std::uint64_t cases = 0;
  std::uint64_t equal = 0;
  // Ours is poison and the tool folded to a value: a legal refinement.
  std::uint64_t refined = 0;
  std::uint64_t mismatches = 0;
  std::vector<std::string> samples;  // first few mismatches

  bool agrees() const { return mismatches == 0; }
};

// One LLVM IR function returning `op` applied to constant `args`.
std::string EmitFunction(const std::string& fn_name, const Op& op,
                         const std::vector<Value>& args);

// Parses a folded `ret` operand ("5", "-3", "true", "poison") at width w.
// Throws ToolError on anything else.
Value ParseFoldedConstant(const std::string& token, unsigned width);

// Throws ToolError when the tool fails or its output cannot be read.
LlvmDiffReport RunLlvmDiff(const LlvmDiffOptions& options);

}  // namespace ssair::tools

#endif  // SSAIR_TOOLS_LLVM_DIFF_H_
