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


#ifndef SSAIR_VERIFY_LINT_H_
#define SSAIR_VERIFY_LINT_H_

#include <string>
#include <vector>

#include "ssair/rewrite/peephole.h"

namespace ssair {

// Division and remainder collapse undefined behaviour into poison, which a
// refinement check then accepts on either side. The lint keeps that sound
// for rewrites: every udiv/sdiv/urem/srem the rhs computes must also be
// computed by the lhs, with the same opcode on the same operand terms, so
// the rhs can only trap where the source already did.
//
// Returns one warning per offending rhs binding; empty means pass.
std::vector<std::string> LintDivRemPairing(const PeepholeRewrite& rw);

bool IsDivRem(const std::string& op_name);

}  // namespace ssair

#endif  // SSAIR_VERIFY_LINT_H_
