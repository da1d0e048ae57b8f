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

// SSA peephole rewriting along def-use chains.
//
// A rewrite's lhs is matched against the expression tree that defines a
// variable, not against a window of adjacent instructions: bindings that
// sit between the matched ones are irrelevant. On a match the rhs is
// inserted right after the matched root and every later use of the root is
// redirected to the rhs result. The old bindings stay behind; DCE cleans
// them up.

#ifndef SSAIR_REWRITE_PEEPHOLE_H_
#define SSAIR_REWRITE_PEEPHOLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"
#include "ssair/rewrite/zipper.h"

namespace ssair {

enum class CheckMode { kExact, kRefine };

const char* ToString(CheckMode mode);

// lhs and rhs over the same free context with the same return type. Only
// pure operations may appear on either side.
class PeepholeRewrite {
 public:
  // Validates the invariants above, and that every free variable the rhs
  // reads is reachable from the lhs root (so a match always binds it).
  // Throws IrError otherwise.
  static PeepholeRewrite Make(const Dialect& dialect, std::string name,
                              Ctxt free_ctxt, Com lhs, Com rhs,
                              CheckMode mode);

  const std::string& name() const { return name_; }
  const Ctxt& free_ctxt() const { return free_ctxt_; }
  const Type& ret_type() const { return lhs_.RetType(); }
  const Com& lhs() const { return lhs_; }
  const Com& rhs() const { return rhs_; }
  CheckMode mode() const { return mode_; }

 private:
  PeepholeRewrite() = default;

  std::string name_;
  Ctxt free_ctxt_;
  Com lhs_;
  Com rhs_;
  CheckMode mode_ = CheckMode::kExact;
};

// Assignment of target variables to lhs variables, indexed by lhs variable
// (free variables first, then lhs bindings).
struct Substitution {
  std::vector<std::optional<std::uint32_t>> map;

  std::optional<std::uint32_t> operator[](std::size_t i) const {
    return map[i];
  }
};

// Matches the def-use tree of `root` (a variable of top.OutCtxt()) against
// `lhs`. Bound lhs variables need an identical opcode (attributes included),
// structurally equal regions and recursively matching operands; free lhs
// variables bind to any target variable of equal type, consistently.
// Impure target operations never match.
std::optional<Substitution> MatchAgainst(const Dialect& dialect,
                                         const Lets& top, const Var& root,
                                         const Ctxt& free_ctxt,
                                         const Com& lhs);

// Tries `rw` at binding `pos` of `target`; nullopt when it does not apply.
std::optional<Com> TryRewritePeepholeAt(const Dialect& dialect,
                                        const PeepholeRewrite& rw,
                                        std::size_t pos, const Ctxt& ctxt,
                                        const Com& target);

// As above, returning `target` unchanged when the rewrite does not apply.
Com RewritePeepholeAt(const Dialect& dialect, const PeepholeRewrite& rw,
                      std::size_t pos, const Ctxt& ctxt, const Com& target);

struct RewriteStats {
  std::size_t applied = 0;
};

// Applies `rw` at most `fuel` times. Region bodies are rewritten before the
// enclosing sequence; positions are scanned in ascending order and the scan
// restarts after every successful application. Bindings whose result is
// already unused are skipped: rewriting them cannot change the program's
// value.
Com RewritePeephole(const Dialect& dialect, std::size_t fuel,
                    const PeepholeRewrite& rw, const Ctxt& ctxt,
                    const Com& target, RewriteStats* stats = nullptr);

// Applies each rewrite in turn, sharing one fuel budget.
Com RewritePeepholeAll(const Dialect& dialect, std::size_t fuel,
                       const std::vector<PeepholeRewrite>& rws,
                       const Ctxt& ctxt, const Com& target,
                       RewriteStats* stats = nullptr);

}  // namespace ssair

#endif  // SSAIR_REWRITE_PEEPHOLE_H_
