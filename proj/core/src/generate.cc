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


#include "ssair/verify/generate.h"

#include <optional>

namespace ssair {
namespace {

struct Scope {
  Ctxt ctxt;
  std::vector<bool> usable;
  std::vector<bool> is_const;

  std::optional<Var> Pick(const Type& t, Rng& rng, bool const_only = false) const {
    std::vector<std::uint32_t> hits;
    for (std::uint32_t i = 0; i < ctxt.size(); ++i) {
      if (usable[i] && ctxt[i] == t && (!const_only || is_const[i])) hits.push_back(i);
    }
    if (hits.empty()) return std::nullopt;
    return Var{hits[UniformBelow(rng, hits.size())], t};
  }
  void Push(const Type& t, bool usable_now = true, bool constant = false) {
    ctxt.PushBack(t);
    usable.push_back(usable_now);
    is_const.push_back(constant);
  }
};

bool Chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

BigInt SmallInt(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return BigInt(lo + static_cast<std::int64_t>(UniformBelow(rng, hi - lo + 1)));
}

class Generator {
 public:
  Generator(DialectKind kind, const Dialect& d, const GenOptions& o, Rng& rng)
      : kind_(kind), d_(d), o_(o), rng_(rng) {}

  Ctxt InputCtxt() {
    Ctxt c;
    switch (kind_) {
      case DialectKind::kLlvm: {
        std::size_t k = 1 + UniformBelow(rng_, 3);
        for (std::size_t i = 0; i < k; ++i) c.PushBack(IntType(o_.width));
        if (o_.width != 1) c.PushBack(IntType(1));
        break;
      }
      case DialectKind::kArith:
      case DialectKind::kScf: {
        std::size_t k = 1 + UniformBelow(rng_, 2);
        for (std::size_t i = 0; i < k; ++i) c.PushBack(ArithInt());
        c.PushBack(ArithNat());
        c.PushBack(ArithBool());
        break;
      }
      case DialectKind::kPoly: {
        std::size_t k = 1 + UniformBelow(rng_, 2);
        for (std::size_t i = 0; i < k; ++i) c.PushBack(RingType());
        c.PushBack(IndexType());
        break;
      }
    }
    return c;
  }

  std::optional<Expr> RandomExpr(Scope& s, unsigned depth) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::optional<Expr> e;
      switch (kind_) {
        case DialectKind::kLlvm: e = LlvmExpr(s); break;
        case DialectKind::kArith: e = ArithExpr(s, depth, false); break;
        case DialectKind::kScf: e = ArithExpr(s, depth, true); break;
        case DialectKind::kPoly: e = PolyExpr(s); break;
      }
      if (e) return e;
    }
    return std::nullopt;
  }

  Com Body(const Ctxt& entry, const Type& ret, unsigned depth) {
    Scope s;
    for (const Type& t : entry) s.Push(t);
    Com body;
    std::size_t k = UniformBelow(rng_, 5);
    for (std::size_t i = 0; i < k; ++i) {
      auto e = RandomExpr(s, depth);
      if (!e) continue;
      bool c = IsConstant(*e);
      s.Push(e->ty, true, c);
      body.lets.push_back(std::move(*e));
    }
    // Prefer the most recent value of the right type.
    for (std::size_t i = s.ctxt.size(); i-- > 0;) {
      if (s.ctxt[i] == ret) {
        body.ret = Var{static_cast<std::uint32_t>(i), ret};
        break;
      }
    }
    return body;
  }

 private:
  static bool IsConstant(const Expr& e) {
    return e.op.name == "llvm.mlir.constant" || e.op.name == "arith.constant" ||
           e.op.name == "poly.constant";
  }

  Expr Make(Op op, std::vector<Var> args, std::vector<Com> regions = {}) {
    Type out = d_.Signature(op)->out;
    return Expr{std::move(op), std::move(out), std::move(args), std::move(regions)};
  }

  std::optional<Expr> LlvmExpr(Scope& s) {
    const unsigned w = o_.width;
    const Type W = IntType(w);
    const Type B = IntType(1);
    const auto& names = LlvmOpNames();
    std::size_t pick = UniformBelow(rng_, names.size() + 2);
    if (pick >= names.size()) {
      Value r = d_.RandomValue(W, rng_);
      BigInt v = r.IsPoison() ? BigInt(UniformBelow(rng_, 3))
                              : r.AsBitVec().ToUnsigned();
      return Make(LlvmConstant(w, v), {});
    }
    const std::string& n = names[pick];
    if (n == "llvm.select") {
      auto c = s.Pick(B, rng_);
      auto a = s.Pick(W, rng_);
      auto b = s.Pick(W, rng_);
      if (!c || !a || !b) return std::nullopt;
      return Make(LlvmOp(n, w), {*c, *a, *b});
    }
    std::string pred;
    if (n == "llvm.icmp") {
      const auto& ps = IcmpPredicates();
      pred = ps[UniformBelow(rng_, ps.size())];
    }
    std::vector<Var> args;
    for (std::size_t i = 0; i < LlvmArity(n); ++i) {
      auto v = s.Pick(W, rng_);
      if (!v) return std::nullopt;
      args.push_back(*v);
    }
    return Make(LlvmOp(n, w, pred), std::move(args));
  }

  std::optional<Expr> ArithExpr(Scope& s, unsigned depth, bool scf) {
    const Type I = ArithInt(), N = ArithNat(), Bo = ArithBool();
    const std::size_t kinds = scf && depth < o_.region_depth ? 11 : 9;
    switch (UniformBelow(rng_, kinds)) {
      case 0:
        return Make(ArithConstant(I, SmallInt(rng_, -8, 8)), {});
      case 1:
        return UniformBelow(rng_, 2)
                   ? Make(ArithConstant(N, SmallInt(rng_, 0, 6)), {})
                   : Make(ArithBoolConstant(UniformBelow(rng_, 2) == 1), {});
      case 2:
      case 3: {
        auto a = s.Pick(I, rng_), b = s.Pick(I, rng_);
        if (!a || !b) return std::nullopt;
        return Make(ArithOp(UniformBelow(rng_, 2) ? "arith.add" : "arith.sub", I),
                    {*a, *b});
      }
      case 4: {
        auto a = s.Pick(I, rng_), b = s.Pick(I, rng_, /*const_only=*/true);
        if (!a || !b) return std::nullopt;
        return Make(ArithOp("arith.mul", I), {*a, *b});
      }
      case 5: {
        static const char* kPreds[] = {"eq", "ne", "lt", "le", "gt", "ge"};
        auto a = s.Pick(I, rng_), b = s.Pick(I, rng_);
        if (!a || !b) return std::nullopt;
        return Make(ArithCmp(kPreds[UniformBelow(rng_, 6)], I), {*a, *b});
      }
      case 6: {
        auto a = s.Pick(N, rng_);
        if (!a) return std::nullopt;
        return Make(ArithOp("arith.to_int", N), {*a});
      }
      case 7:
      case 8: {
        const Type ts[] = {I, N, Bo};
        const Type& t = ts[UniformBelow(rng_, 3)];
        auto a = s.Pick(t, rng_);
        if (!a) return std::nullopt;
        return Make(ArithOp("arith.copy", t), {*a});
      }
      case 9: {
        const Type ts[] = {I, I, N, Bo};
        const Type& t = ts[UniformBelow(rng_, 4)];
        auto start = s.Pick(I, rng_), step = s.Pick(I, rng_);
        auto n = s.Pick(N, rng_), seed = s.Pick(t, rng_);
        if (!start || !step || !n || !seed) return std::nullopt;
        Com body = Body(Ctxt{I, t}, t, depth + 1);
        return Make(ScfFor(t), {*start, *step, *n, *seed}, {std::move(body)});
      }
      default: {
        const Type ts[] = {I, N, Bo};
        const Type& t = ts[UniformBelow(rng_, 3)];
        auto c = s.Pick(Bo, rng_), v = s.Pick(t, rng_);
        if (!c || !v) return std::nullopt;
        Com then_body = Body(Ctxt{t}, t, depth + 1);
        Com else_body = Body(Ctxt{t}, t, depth + 1);
        return Make(ScfIf(t), {*c, *v}, {std::move(then_body), std::move(else_body)});
      }
    }
  }

  std::optional<Expr> PolyExpr(Scope& s) {
    const auto& poly = dynamic_cast<const PolyDialect&>(d_);
    const Type R = RingType(), Ix = IndexType();
    const auto d = static_cast<std::int64_t>(poly.params().degree());
    const auto q = static_cast<std::int64_t>(poly.params().q);
    auto ring = [&](const char* name, std::size_t arity) -> std::optional<Expr> {
      std::vector<Var> args;
      for (std::size_t i = 0; i < arity; ++i) {
        auto v = s.Pick(R, rng_);
        if (!v) return std::nullopt;
        args.push_back(*v);
      }
      return Make(Op{name, R, {}}, std::move(args));
    };
    switch (UniformBelow(rng_, 11)) {
      case 0: return ring("poly.add", 2);
      case 1: return ring("poly.sub", 2);
      case 2: return ring("poly.mul", 2);
      case 3: {
        auto p = s.Pick(R, rng_);
        if (!p) return std::nullopt;
        return Make(Op{"poly.mul_constant", R, {{"value", SmallInt(rng_, -5, 5)}}}, {*p});
      }
      case 4: return ring("poly.leading_term", 1);
      case 5: {
        auto c = s.Pick(Ix, rng_), i = s.Pick(Ix, rng_);
        if (!c || !i) return std::nullopt;
        return Make(Op{"poly.monomial", R, {}}, {*c, *i});
      }
      case 6: {
        auto p = s.Pick(R, rng_), i = s.Pick(Ix, rng_);
        if (!p || !i) return std::nullopt;
        return Make(Op{"poly.monomial_mul", R, {}}, {*p, *i});
      }
      case 7: {
        auto p = s.Pick(R, rng_);
        if (!p) return std::nullopt;
        return Make(Op{"poly.to_tensor", TensorType(d), {}}, {*p});
      }
      case 8: {
        auto t = s.Pick(TensorType(d), rng_);
        if (!t) return std::nullopt;
        return Make(Op{"poly.from_tensor", R, {}}, {*t});
      }
      case 9: {
        if (UniformBelow(rng_, 2)) {
          return Make(Op{"poly.constant", R, {{"value", SmallInt(rng_, -q, q)}}}, {});
        }
        std::vector<BigInt> cs;
        for (std::int64_t i = 0; i < d; ++i) cs.push_back(SmallInt(rng_, 0, q - 1));
        return Make(Op{"poly.constant", R, {{"value", cs}}}, {});
      }
      default:
        return Make(Op{"arith.constant", Ix, {{"value", SmallInt(rng_, -4, 2 * d + 4)}}}, {});
    }
  }

  DialectKind kind_;
  const Dialect& d_;
  const GenOptions& o_;
  Rng& rng_;
};

Var Remap(const Var& v, const std::vector<std::optional<std::uint32_t>>& m) {
  return Var{*m[v.index], v.ty};
}

}  // namespace

GeneratedProgram GenerateProgram(DialectKind kind, const Dialect& dialect,
                                 const GenOptions& options, Rng& rng,
                                 std::span<const PeepholeRewrite> plant) {
  Generator gen(kind, dialect, options, rng);
  GeneratedProgram out;
  out.ctxt = gen.InputCtxt();

  Scope s;
  for (const Type& t : out.ctxt) s.Push(t);
  // Index into `clean` for every variable of `com`; nullopt for injected
  // dead bindings.
  std::vector<std::optional<std::uint32_t>> to_clean;
  for (std::uint32_t i = 0; i < out.ctxt.size(); ++i) to_clean.push_back(i);
  std::uint32_t clean_size = static_cast<std::uint32_t>(out.ctxt.size());
  std::vector<std::uint32_t> dead;

  auto emit = [&](Expr e) {
    Expr c = e;
    for (Var& a : c.args) a = Remap(a, to_clean);
    out.clean.lets.push_back(std::move(c));
    to_clean.push_back(clean_size++);
    bool constant = e.op.name.find("constant") != std::string::npos;
    s.Push(e.ty, true, constant);
    out.com.lets.push_back(std::move(e));
  };

  const std::size_t steps = 1 + UniformBelow(rng, options.max_bindings);
  for (std::size_t step = 0; step < steps; ++step) {
    if (!plant.empty() && Chance(rng, options.plant_rate)) {
      const PeepholeRewrite& rw = plant[UniformBelow(rng, plant.size())];
      std::vector<Var> sigma;
      for (const Type& t : rw.free_ctxt()) {
        auto v = s.Pick(t, rng);
        if (!v) break;
        sigma.push_back(*v);
      }
      if (sigma.size() == rw.free_ctxt().size()) {
        const std::uint32_t base = static_cast<std::uint32_t>(s.ctxt.size());
        const std::uint32_t k = static_cast<std::uint32_t>(sigma.size());
        for (const Expr& e : rw.lhs().lets) {
          Expr copy = e;
          for (Var& a : copy.args) a = a.index < k ? sigma[a.index] : Var{base + a.index - k, a.ty};
          emit(std::move(copy));
        }
        ++out.planted;
        continue;
      }
    }
    if (Chance(rng, options.dead_rate)) {
      // Dead bindings may read earlier dead ones, making chains.
      for (std::uint32_t i : dead) s.usable[i] = true;
      auto e = gen.RandomExpr(s, 0);
      for (std::uint32_t i : dead) s.usable[i] = false;
      if (e) {
        dead.push_back(static_cast<std::uint32_t>(s.ctxt.size()));
        s.Push(e->ty, false);
        to_clean.push_back(std::nullopt);
        out.com.lets.push_back(std::move(*e));
        ++out.dead_injected;
        continue;
      }
    }
    if (Chance(rng, options.dup_rate) && !out.com.lets.empty()) {
      const std::size_t k = out.ctxt.size();
      std::vector<std::size_t> candidates;
      for (std::size_t j = 0; j < out.com.lets.size(); ++j) {
        if (s.usable[k + j]) candidates.push_back(j);
      }
      if (!candidates.empty()) {
        std::size_t j = candidates[UniformBelow(rng, candidates.size())];
        Expr e = out.com.lets[j];
        s.Push(e.ty, true, s.is_const[k + j]);
        to_clean.push_back(to_clean[k + j]);
        out.com.lets.push_back(std::move(e));
        ++out.dups_injected;
        continue;
      }
    }
    if (auto e = gen.RandomExpr(s, 0)) emit(std::move(*e));
  }

  // Return the latest usable value.
  std::uint32_t r = 0;
  for (std::uint32_t i = static_cast<std::uint32_t>(s.ctxt.size()); i-- > 0;) {
    if (s.usable[i]) {
      r = i;
      break;
    }
  }
  out.com.ret = Var{r, s.ctxt[r]};
  out.clean.ret = Remap(out.com.ret, to_clean);
  return out;
}

}  // namespace ssair
