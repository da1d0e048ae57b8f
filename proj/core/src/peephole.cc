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

#include "ssair/rewrite/peephole.h"

#include <functional>

#include "ssair/ir/morphism.h"
#include "ssair/ir/typecheck.h"

namespace ssair {

const char* ToString(CheckMode mode) {
  return mode == CheckMode::kExact ? "exact" : "refine";
}

namespace {

bool IsPure(const Dialect& dialect, const Op& op) {
  auto sig = dialect.Signature(op);
  return sig && sig->effect == EffectKind::kPure;
}

bool AllPure(const Dialect& dialect, const Com& com) {
  for (const Expr& e : com.lets) {
    if (!IsPure(dialect, e.op)) return false;
    for (const Com& r : e.regions)
      if (!AllPure(dialect, r)) return false;
  }
  return true;
}

// Free variables of `lhs` reachable from its returned variable.
std::vector<bool> ReachableFree(std::size_t free_size, const Com& lhs) {
  std::vector<bool> seen(free_size + lhs.lets.size(), false);
  std::vector<bool> free(free_size, false);
  std::vector<std::uint32_t> work{lhs.ret.index};
  while (!work.empty()) {
    std::uint32_t v = work.back();
    work.pop_back();
    if (v >= seen.size() || seen[v]) continue;
    seen[v] = true;
    if (v < free_size) {
      free[v] = true;
      continue;
    }
    for (const Var& a : lhs.lets[v - free_size].args) work.push_back(a.index);
  }
  return free;
}

class Matcher {
 public:
  Matcher(const Dialect& dialect, const Lets& top, const Ctxt& delta,
          const Ctxt& free_ctxt, const Com& lhs)
      : dialect_(dialect),
        top_(top),
        delta_(delta),
        free_ctxt_(free_ctxt),
        lhs_(lhs) {
    sigma_.map.assign(free_ctxt.size() + lhs.lets.size(), std::nullopt);
  }

  bool MatchVar(std::uint32_t pat, std::uint32_t tgt) {
    if (pat >= sigma_.map.size() || tgt >= delta_.size()) return false;
    if (sigma_.map[pat]) return *sigma_.map[pat] == tgt;
    const std::uint32_t free_size = free_ctxt_.size();
    if (pat < free_size) {
      if (!(free_ctxt_[pat] == delta_[tgt])) return false;
      sigma_.map[pat] = tgt;
      return true;
    }
    const std::uint32_t gamma_size = top_.gamma.size();
    if (tgt < gamma_size) return false;
    const Expr& pe = lhs_.lets[pat - free_size];
    const Expr& te = top_.bindings[tgt - gamma_size];
    if (!(pe.op == te.op) || !(pe.ty == te.ty) ||
        pe.args.size() != te.args.size()) {
      return false;
    }
    // Regions are compared as black boxes.
    if (!(pe.regions == te.regions)) return false;
    if (!IsPure(dialect_, te.op)) return false;
    for (std::size_t i = 0; i < pe.args.size(); ++i)
      if (!MatchVar(pe.args[i].index, te.args[i].index)) return false;
    sigma_.map[pat] = tgt;
    return true;
  }

  Substitution Take() { return std::move(sigma_); }

 private:
  const Dialect& dialect_;
  const Lets& top_;
  const Ctxt& delta_;
  const Ctxt& free_ctxt_;
  const Com& lhs_;
  Substitution sigma_;
};

}  // namespace

PeepholeRewrite PeepholeRewrite::Make(const Dialect& dialect,
                                      std::string name, Ctxt free_ctxt,
                                      Com lhs, Com rhs, CheckMode mode) {
  auto fail = [&](const std::string& why) {
    throw IrError("peephole rewrite '" + name + "': " + why);
  };
  for (const auto* side : {&lhs, &rhs}) {
    auto errors = TypeCheck(dialect, free_ctxt, *side);
    if (!errors.empty()) {
      fail(std::string(side == &lhs ? "lhs" : "rhs") +
           " is ill-typed: " + errors.front().ToString());
    }
    if (!AllPure(dialect, *side)) fail("only pure operations may be rewritten");
  }
  if (!(lhs.RetType() == rhs.RetType())) {
    fail("lhs and rhs return different types");
  }
  std::vector<bool> bound = ReachableFree(free_ctxt.size(), lhs);
  auto check_free = [&](const Var& v) {
    if (v.index < free_ctxt.size() && !bound[v.index]) {
      fail("rhs reads %" + std::to_string(v.index) +
           ", which the lhs never binds");
    }
  };
  for (const Expr& e : rhs.lets)
    for (const Var& a : e.args) check_free(a);
  check_free(rhs.ret);

  PeepholeRewrite rw;
  rw.name_ = std::move(name);
  rw.free_ctxt_ = std::move(free_ctxt);
  rw.lhs_ = std::move(lhs);
  rw.rhs_ = std::move(rhs);
  rw.mode_ = mode;
  return rw;
}

std::optional<Substitution> MatchAgainst(const Dialect& dialect,
                                         const Lets& top, const Var& root,
                                         const Ctxt& free_ctxt,
                                         const Com& lhs) {
  Ctxt delta = top.OutCtxt();
  if (!ValidIn(root, delta)) {
    throw IrError("match root %" + std::to_string(root.index) +
                  " is not a variable of the zipper's context");
  }
  if (!(lhs.RetType() == root.ty)) return std::nullopt;
  Matcher m(dialect, top, delta, free_ctxt, lhs);
  if (!m.MatchVar(lhs.ret.index, root.index)) return std::nullopt;
  return m.Take();
}

std::optional<Com> TryRewritePeepholeAt(const Dialect& dialect,
                                        const PeepholeRewrite& rw,
                                        std::size_t pos, const Ctxt& ctxt,
                                        const Com& target) {
  if (pos >= target.lets.size()) return std::nullopt;
  const Var root{static_cast<std::uint32_t>(ctxt.size() + pos),
                 target.lets[pos].ty};
  if (!(root.ty == rw.ret_type())) return std::nullopt;

  Zipper z = SplitProgramAt(pos + 1, ctxt, target);
  auto sigma = MatchAgainst(dialect, z.top, root, rw.free_ctxt(), rw.lhs());
  if (!sigma) return std::nullopt;

  const Ctxt delta = z.top.OutCtxt();
  ContextMorphism inst(rw.free_ctxt(), delta);
  for (std::uint32_t i = 0; i < rw.free_ctxt().size(); ++i)
    if (auto t = (*sigma)[i]) inst.Set(i, *t);
  Com mid = ApplyContextMorphism(inst, rw.rhs());

  ContextMorphism retarget =
      ContextMorphism::Weaken(delta, OutCtxt(delta, mid));
  retarget.Set(root.index, mid.ret.index);
  return ZipWithMiddle(z.top, mid, z.bot, retarget);
}

Com RewritePeepholeAt(const Dialect& dialect, const PeepholeRewrite& rw,
                      std::size_t pos, const Ctxt& ctxt, const Com& target) {
  auto out = TryRewritePeepholeAt(dialect, rw, pos, ctxt, target);
  return out ? std::move(*out) : target;
}

namespace {

Com RewriteWithFuel(const Dialect& dialect, const PeepholeRewrite& rw,
                    const Ctxt& ctxt, const Com& target, std::size_t& fuel,
                    RewriteStats& stats) {
  if (fuel == 0) return target;
  Com cur = target;

  for (Expr& e : cur.lets) {
    if (e.regions.empty()) continue;
    auto sig = dialect.Signature(e.op);
    if (!sig || sig->regions.size() != e.regions.size()) continue;
    for (std::size_t r = 0; r < e.regions.size() && fuel > 0; ++r) {
      e.regions[r] = RewriteWithFuel(dialect, rw, sig->regions[r].entry,
                                     e.regions[r], fuel, stats);
    }
  }

  bool progress = true;
  while (progress && fuel > 0) {
    progress = false;
    std::vector<std::size_t> uses = UseCounts(ctxt, cur);
    for (std::size_t pos = 0; pos < cur.lets.size(); ++pos) {
      if (uses[ctxt.size() + pos] == 0) continue;
      if (auto next = TryRewritePeepholeAt(dialect, rw, pos, ctxt, cur)) {
        cur = std::move(*next);
        --fuel;
        ++stats.applied;
        progress = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace

Com RewritePeephole(const Dialect& dialect, std::size_t fuel,
                    const PeepholeRewrite& rw, const Ctxt& ctxt,
                    const Com& target, RewriteStats* stats) {
  RewriteStats local;
  Com out = RewriteWithFuel(dialect, rw, ctxt, target, fuel,
                            stats ? *stats : local);
  return out;
}

Com RewritePeepholeAll(const Dialect& dialect, std::size_t fuel,
                       const std::vector<PeepholeRewrite>& rws,
                       const Ctxt& ctxt, const Com& target,
                       RewriteStats* stats) {
  RewriteStats local;
  RewriteStats& st = stats ? *stats : local;
  Com cur = target;
  for (const PeepholeRewrite& rw : rws) {
    if (fuel == 0) break;
    cur = RewriteWithFuel(dialect, rw, ctxt, cur, fuel, st);
  }
  return cur;
}

}  // namespace ssair
