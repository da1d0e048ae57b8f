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

#include "ssair/dialects/scf.h"

#include "ssair/dialects/arith.h"
#include "ssair/ir/morphism.h"
#include "ssair/rewrite/zipper.h"

namespace ssair {

ScfDialect::ScfDialect()
    : ScfDialect(std::make_shared<ArithDialect>(),
                 ScfBaseTypes{ArithInt(), ArithNat(), ArithBool()}) {}

ScfDialect::ScfDialect(std::shared_ptr<const Dialect> base,
                       ScfBaseTypes types)
    : base_(std::move(base)), types_(std::move(types)) {}

Op ScfFor(const Type& carried) { return Op{"scf.for", carried, {}}; }
Op ScfIf(const Type& result) { return Op{"scf.if", result, {}}; }

std::optional<OpSignature> ScfDialect::Signature(const Op& op) const {
  if (op.name == "scf.for" || op.name == "scf.if") {
    if (!op.attrs.empty() || !base_->IsValidType(op.type)) return std::nullopt;
    const Type& t = op.type;
    OpSignature sig;
    sig.out = t;
    if (op.name == "scf.for") {
      sig.args = {types_.integer, types_.integer, types_.natural, t};
      sig.regions = {RegionSig{Ctxt{types_.integer, t}, t}};
    } else {
      sig.args = {types_.boolean, t};
      sig.regions = {RegionSig{Ctxt{t}, t}, RegionSig{Ctxt{t}, t}};
    }
    return sig;
  }
  return base_->Signature(op);
}

Value ForDenote(const Type& int_type, const BigInt& start, const BigInt& step,
                const BigInt& niters, const Value& seed,
                const RegionEvaluator& body) {
  BigInt i = start;
  Value v = seed;
  for (BigInt k = 0; k < niters; ++k) {
    v = body(std::vector<Value>{Value(int_type, i), std::move(v)});
    i += step;
  }
  return v;
}

Value ScfDialect::Denote(const Op& op, std::span<const Value> args,
                         std::span<const RegionEvaluator> regions,
                         EffectState* state) const {
  if (op.name == "scf.for") {
    return ForDenote(types_.integer, args[0].AsInt(), args[1].AsInt(),
                     args[2].AsInt(), args[3], regions[0]);
  }
  if (op.name == "scf.if") {
    const RegionEvaluator& branch = args[0].AsBool() ? regions[0] : regions[1];
    return branch(std::vector<Value>{args[1]});
  }
  return base_->Denote(op, args, regions, state);
}

Op ScfDialect::BuildOp(const OpSyntax& syn) const {
  const bool is_for = syn.name == "scf.for";
  if (!is_for && syn.name != "scf.if") return base_->BuildOp(syn);
  if (!syn.attrs.empty()) {
    throw ElabError(ElabErrorKind::kMalformedAttr,
                    "'" + syn.name + "' takes no attributes");
  }
  const std::size_t carried = is_for ? 3 : 1;
  std::optional<Type> t;
  if (syn.operand_types.size() == carried + 1) {
    t = syn.operand_types[carried];
  } else if (syn.result_type) {
    t = syn.result_type;
  }
  if (!t) {
    throw ElabError(ElabErrorKind::kTypeMismatch,
                    "'" + syn.name + "' expects " +
                        std::to_string(carried + 1) + " operands");
  }
  return Op{syn.name, *t, {}};
}

// ---- transformations ------------------------------------------------------

namespace {

std::optional<BigInt> IntConst(const Ctxt& ctxt, const Com& com,
                               const Var& v) {
  if (v.index < ctxt.size()) return std::nullopt;
  const Expr& e = com.lets[v.index - ctxt.size()];
  if (e.op.name != "arith.constant") return std::nullopt;
  const Attribute* a = e.op.FindAttr("value");
  if (!a || !std::holds_alternative<BigInt>(*a)) return std::nullopt;
  return std::get<BigInt>(*a);
}

std::optional<bool> BoolConst(const Ctxt& ctxt, const Com& com, const Var& v) {
  if (v.index < ctxt.size()) return std::nullopt;
  const Expr& e = com.lets[v.index - ctxt.size()];
  if (e.op.name != "arith.constant") return std::nullopt;
  const Attribute* a = e.op.FindAttr("value");
  if (!a || !std::holds_alternative<bool>(*a)) return std::nullopt;
  return std::get<bool>(*a);
}

// Inserts `mid` (a Com over the context after binding `pos`) right after
// that binding and sends later uses of it to mid's result.
Com ReplaceAt(const Ctxt& ctxt, const Com& com, std::size_t pos,
              const Com& mid) {
  Zipper z = SplitProgramAt(pos + 1, ctxt, com);
  const Ctxt delta = z.top.OutCtxt();
  ContextMorphism retarget =
      ContextMorphism::Weaken(delta, OutCtxt(delta, mid));
  retarget.Set(static_cast<std::uint32_t>(ctxt.size() + pos), mid.ret.index);
  return ZipWithMiddle(z.top, mid, z.bot, retarget);
}

// Builds a Com over `base` one binding at a time.
class Builder {
 public:
  explicit Builder(const Ctxt& base) : next_(base.size()) {}
  Var Add(Op op, Type ty, std::vector<Var> args, std::vector<Com> regions = {}) {
    com_.lets.push_back(Expr{std::move(op), ty, std::move(args),
                             std::move(regions)});
    return Var{next_++, ty};
  }
  Com Finish(const Var& ret) {
    com_.ret = ret;
    return std::move(com_);
  }

 private:
  std::uint32_t next_;
  Com com_;
};

using SiteFn = std::optional<Com> (*)(const ScfDialect&, const Ctxt&,
                                      const Com&, std::size_t);

// Runs `fn` on every binding, regions first; after a change the scan
// resumes behind the inserted code.
ScfTransformResult Sweep(const ScfDialect& d, const Ctxt& ctxt, const Com& com,
                         SiteFn fn) {
  ScfTransformResult out{com, 0};
  for (Expr& e : out.com.lets) {
    if (e.regions.empty()) continue;
    auto sig = d.Signature(e.op);
    if (!sig) continue;
    for (std::size_t r = 0; r < e.regions.size(); ++r) {
      auto inner = Sweep(d, sig->regions[r].entry, e.regions[r], fn);
      e.regions[r] = std::move(inner.com);
      out.applied += inner.applied;
    }
  }
  for (std::size_t pos = 0; pos < out.com.lets.size(); ++pos) {
    auto mid = fn(d, ctxt, out.com, pos);
    if (!mid) continue;
    const std::size_t inserted = mid->lets.size();
    out.com = ReplaceAt(ctxt, out.com, pos, *mid);
    ++out.applied;
    pos += inserted;
  }
  return out;
}

std::optional<Com> DeadLoopSite(const ScfDialect&, const Ctxt& ctxt,
                                const Com& com, std::size_t pos) {
  const Expr& e = com.lets[pos];
  if (e.op.name != "scf.for") return std::nullopt;
  auto n = IntConst(ctxt, com, e.args[2]);
  if (!n || *n != 0) return std::nullopt;
  return Com{{}, e.args[3]};
}

std::optional<Com> IfConstSite(const ScfDialect&, const Ctxt& ctxt,
                               const Com& com, std::size_t pos) {
  const Expr& e = com.lets[pos];
  if (e.op.name != "scf.if") return std::nullopt;
  auto c = BoolConst(ctxt, com, e.args[0]);
  if (!c) return std::nullopt;
  const Com& branch = e.regions[*c ? 0 : 1];
  Ctxt delta = OutCtxt(ctxt, std::vector<Expr>(com.lets.begin(),
                                               com.lets.begin() + pos + 1));
  ContextMorphism inline_hom(Ctxt{e.ty}, delta);
  inline_hom.Set(0, e.args[1].index);
  return ApplyContextMorphism(inline_hom, branch);
}

std::optional<Com> FusionSite(const ScfDialect& d, const Ctxt& ctxt,
                              const Com& com, std::size_t pos) {
  const Expr& second = com.lets[pos];
  if (second.op.name != "scf.for") return std::nullopt;
  const Var& seed2 = second.args[3];
  if (seed2.index < ctxt.size()) return std::nullopt;
  const Expr& first = com.lets[seed2.index - ctxt.size()];
  if (first.op.name != "scf.for" || !(first.op == second.op) ||
      !(first.regions == second.regions)) {
    return std::nullopt;
  }
  auto s1 = IntConst(ctxt, com, first.args[0]);
  auto k1 = IntConst(ctxt, com, first.args[1]);
  auto n1 = IntConst(ctxt, com, first.args[2]);
  auto s2 = IntConst(ctxt, com, second.args[0]);
  auto k2 = IntConst(ctxt, com, second.args[1]);
  auto n2 = IntConst(ctxt, com, second.args[2]);
  if (!s1 || !k1 || !n1 || !s2 || !k2 || !n2) return std::nullopt;
  if (*k1 != *k2 || *s2 != *s1 + *n1 * *k1) return std::nullopt;

  Ctxt delta = OutCtxt(ctxt, std::vector<Expr>(com.lets.begin(),
                                               com.lets.begin() + pos + 1));
  Builder b(delta);
  const Type& nat = d.types().natural;
  Var n = b.Add(ArithConstant(nat, *n1 + *n2), nat, {});
  Var fused = b.Add(first.op, first.ty,
                    {first.args[0], first.args[1], n, first.args[3]},
                    first.regions);
  return b.Finish(fused);
}

std::optional<Com> ReversalSite(const ScfDialect& d, const Ctxt& ctxt,
                                const Com& com, std::size_t pos) {
  const Expr& e = com.lets[pos];
  if (e.op.name != "scf.for") return std::nullopt;
  auto sig = d.Signature(e.op);
  if (UseCounts(sig->regions[0].entry, e.regions[0])[0] != 0) {
    return std::nullopt;
  }
  Ctxt delta = OutCtxt(ctxt, std::vector<Expr>(com.lets.begin(),
                                               com.lets.begin() + pos + 1));
  const Type& it = d.types().integer;
  Builder b(delta);
  Var one = b.Add(ArithConstant(it, 1), it, {});
  Var zero = b.Add(ArithConstant(it, 0), it, {});
  Var n = b.Add(ArithOp("arith.to_int", d.types().natural), it, {e.args[2]});
  Var last = b.Add(ArithOp("arith.sub", it), it, {n, one});
  Var offset = b.Add(ArithOp("arith.mul", it), it, {last, e.args[1]});
  Var start = b.Add(ArithOp("arith.add", it), it, {e.args[0], offset});
  Var step = b.Add(ArithOp("arith.sub", it), it, {zero, e.args[1]});
  Var rev = b.Add(e.op, e.ty, {start, step, e.args[2], e.args[3]}, e.regions);
  return b.Finish(rev);
}

}  // namespace

ScfTransformResult DeadLoopElim(const ScfDialect& d, const Ctxt& ctxt,
                                const Com& com) {
  return Sweep(d, ctxt, com, &DeadLoopSite);
}

ScfTransformResult IfConstFold(const ScfDialect& d, const Ctxt& ctxt,
                               const Com& com) {
  return Sweep(d, ctxt, com, &IfConstSite);
}

ScfTransformResult LoopFusion(const ScfDialect& d, const Ctxt& ctxt,
                              const Com& com) {
  return Sweep(d, ctxt, com, &FusionSite);
}

ScfTransformResult LoopReversal(const ScfDialect& d, const Ctxt& ctxt,
                                const Com& com) {
  return Sweep(d, ctxt, com, &ReversalSite);
}

PeepholeRewrite IterAddToMul(const ScfDialect& d, const BigInt& delta) {
  const Type& it = d.types().integer;
  const Type& nat = d.types().natural;
  Ctxt free{it, it, nat, it};  // start, step, niters, seed

  Ctxt entry{it, it};
  Builder body(entry);
  Var dv = body.Add(ArithConstant(it, delta), it, {});
  Var sum = body.Add(ArithOp("arith.add", it), it, {Var{1, it}, dv});

  Builder lhs(free);
  Var loop = lhs.Add(ScfFor(it), it,
                     {Var{0, it}, Var{1, it}, Var{2, nat}, Var{3, it}},
                     {body.Finish(sum)});

  Builder rhs(free);
  Var n = rhs.Add(ArithOp("arith.to_int", nat), it, {Var{2, nat}});
  Var dr = rhs.Add(ArithConstant(it, delta), it, {});
  Var prod = rhs.Add(ArithOp("arith.mul", it), it, {n, dr});
  Var out = rhs.Add(ArithOp("arith.add", it), it, {Var{3, it}, prod});

  return PeepholeRewrite::Make(d, "iter_add_to_mul_" + delta.str(), free,
                               lhs.Finish(loop), rhs.Finish(out),
                               CheckMode::kExact);
}

PeepholeRewrite DeadLoopRewrite(const ScfDialect& d, const Com& body) {
  const Type& it = d.types().integer;
  const Type& nat = d.types().natural;
  const Type t = body.RetType();
  Ctxt free{it, it, t};  // start, step, seed
  Builder lhs(free);
  Var zero = lhs.Add(ArithConstant(nat, 0), nat, {});
  Var loop = lhs.Add(ScfFor(t), t, {Var{0, it}, Var{1, it}, zero, Var{2, t}},
                     {body});
  return PeepholeRewrite::Make(d, "dead_loop", free, lhs.Finish(loop),
                               Com{{}, Var{2, t}}, CheckMode::kExact);
}

PeepholeRewrite IfConstRewrite(const ScfDialect& d, bool cond,
                               const Com& then_body, const Com& else_body) {
  const Type t = then_body.RetType();
  const Type& bt = d.types().boolean;
  Ctxt free{t};
  Builder lhs(free);
  Var c = lhs.Add(ArithBoolConstant(cond), bt, {});
  Var r = lhs.Add(ScfIf(t), t, {c, Var{0, t}}, {then_body, else_body});
  // The branch body is a Com over [t], which is exactly the free context.
  return PeepholeRewrite::Make(d, cond ? "if_true" : "if_false", free,
                               lhs.Finish(r), cond ? then_body : else_body,
                               CheckMode::kExact);
}

}  // namespace ssair
