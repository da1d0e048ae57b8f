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

#include "ssair/syntax/elaborate.h"

#include <map>
#include <utility>

#include "ssair/ir/typecheck.h"

namespace ssair::syntax {

ElaborationError::ElaborationError(ElabErrorKind kind, SourceLoc loc,
                                   const std::string& message)
    : ElabError(kind, ToString(loc) + ": " + message), loc_(loc) {}

namespace {

// Largest attribute magnitude accepted, in bits.
constexpr unsigned kMaxAttrBits = 1 << 16;

std::string TypesToString(const Dialect& d, const std::vector<Type>& ts) {
  std::string out = "(";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out += ", ";
    out += d.PrintType(ts[i]);
  }
  return out + ")";
}

class Elaborator {
 public:
  Elaborator(const Dialect& dialect, const ElabParams& params)
      : d_(dialect), params_(params) {}

  Program Block(const AstBlock& block, bool in_region) {
    Program out;
    std::map<std::string, Var> names;
    for (const AstBlockArg& arg : block.args) {
      Type t = ResolveType(arg.type, arg.loc);
      names[arg.name] = Var{static_cast<std::uint32_t>(out.ctxt.size()), t};
      out.ctxt.PushBack(t);
    }
    if (block.ops.empty()) {
      throw ElaborationError(
          ElabErrorKind::kTerminator, block.end_loc,
          "block ends without its terminator '" +
              d_.TerminatorName(in_region) + "'");
    }
    std::uint32_t next = out.ctxt.size();
    for (std::size_t k = 0; k < block.ops.size(); ++k) {
      const AstOp& op = block.ops[k];
      const bool last = k + 1 == block.ops.size();
      if (d_.IsTerminator(op.name)) {
        if (!last) {
          throw ElaborationError(ElabErrorKind::kTerminator, op.loc,
                                 "terminator '" + op.name +
                                     "' must be the last operation");
        }
        out.com.ret = Terminator(op, names, in_region);
        return out;
      }
      if (last) {
        throw ElaborationError(
            ElabErrorKind::kTerminator, op.loc,
            "block must end with '" + d_.TerminatorName(in_region) +
                "', found '" + op.name + "'");
      }
      Expr e = Operation(op, names);
      if (op.result) names[op.result->name] = Var{next, e.ty};
      ++next;
      out.com.lets.push_back(std::move(e));
    }
    return out;  // unreachable: the last op is handled above
  }

 private:
  Type ResolveType(const std::string& text, SourceLoc loc) {
    auto t = d_.ParseType(text);
    if (!t) {
      throw ElaborationError(ElabErrorKind::kUnknownType, loc,
                             "unknown type '" + text + "' in dialect " +
                                 d_.name());
    }
    if (t->symbolic()) {
      if (!params_.width) {
        throw ElaborationError(
            ElabErrorKind::kUnresolvedWidth, loc,
            "width placeholder in '" + text +
                "' needs a width parameter");
      }
      t = Type(t->tag(), *params_.width);
    }
    if (!d_.IsValidType(*t)) {
      throw ElaborationError(ElabErrorKind::kUnknownType, loc,
                             "invalid type '" + text + "'");
    }
    return *t;
  }

  std::vector<Type> ResolveTypes(const std::vector<std::string>& texts,
                                 SourceLoc loc) {
    std::vector<Type> out;
    for (const std::string& s : texts) out.push_back(ResolveType(s, loc));
    return out;
  }

  Var Lookup(const AstValueRef& ref, const std::map<std::string, Var>& names) {
    auto it = names.find(ref.name);
    if (it == names.end()) {
      throw ElaborationError(ElabErrorKind::kTypeMismatch, ref.loc,
                             "use of undefined SSA value %" + ref.name);
    }
    return it->second;
  }

  Attribute Attr(const AstAttr& a) {
    try {
      if (const auto* e = std::get_if<IntExpr>(&a.value))
        return EvalIntExpr(*e, params_);
      if (const auto* s = std::get_if<std::string>(&a.value)) return *s;
      if (const auto* b = std::get_if<bool>(&a.value)) return *b;
      std::vector<BigInt> out;
      for (const IntExpr& e : std::get<std::vector<IntExpr>>(a.value))
        out.push_back(EvalIntExpr(e, params_));
      return out;
    } catch (const ElaborationError&) {
      throw;
    } catch (const std::exception& ex) {
      throw ElaborationError(ElabErrorKind::kMalformedAttr, a.loc, ex.what());
    }
  }

  Var Terminator(const AstOp& op, const std::map<std::string, Var>& names,
                 bool in_region) {
    const std::string want = d_.TerminatorName(in_region);
    if (op.name != want) {
      throw ElaborationError(ElabErrorKind::kTerminator, op.loc,
                             "expected terminator '" + want + "' here, found '" +
                                 op.name + "'");
    }
    if (op.result || op.operands.size() != 1 || !op.regions.empty() ||
        !op.attrs.empty()) {
      throw ElaborationError(ElabErrorKind::kTerminator, op.loc,
                             "'" + op.name +
                                 "' takes exactly one operand and produces "
                                 "no result");
    }
    Var v = Lookup(op.operands[0], names);
    std::optional<Type> annotated;
    if (op.short_type) annotated = ResolveType(*op.short_type, op.loc);
    if (op.input_types) {
      auto in = ResolveTypes(*op.input_types, op.loc);
      if (in.size() != 1 || (op.result_types && !op.result_types->empty())) {
        throw ElaborationError(ElabErrorKind::kTypeMismatch, op.loc,
                               "terminator type must be (T) -> ()");
      }
      annotated = in[0];
    }
    if (annotated && !(*annotated == v.ty)) {
      throw ElaborationError(ElabErrorKind::kTypeMismatch, op.loc,
                             "returned value has type " + d_.PrintType(v.ty) +
                                 ", annotated " + d_.PrintType(*annotated));
    }
    return v;
  }

  Expr Operation(const AstOp& op, const std::map<std::string, Var>& names) {
    OpSyntax syn;
    syn.name = op.name;
    std::vector<Var> args;
    for (const AstValueRef& ref : op.operands) {
      args.push_back(Lookup(ref, names));
      syn.operand_types.push_back(args.back().ty);
    }
    for (const AstAttr& a : op.attrs) {
      syn.attrs[a.key] = Attr(a);
      if (a.type) syn.attr_types[a.key] = ResolveType(*a.type, a.loc);
    }
    if (op.input_types) {
      syn.input_types = ResolveTypes(*op.input_types, op.loc);
      if (syn.input_types->size() != args.size()) {
        throw ElaborationError(
            ElabErrorKind::kTypeMismatch, op.loc,
            "'" + op.name + "' has " + std::to_string(args.size()) +
                " operands but its type lists " +
                std::to_string(syn.input_types->size()));
      }
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (!((*syn.input_types)[i] == args[i].ty)) {
          throw ElaborationError(
              ElabErrorKind::kTypeMismatch, op.operands[i].loc,
              "operand %" + op.operands[i].name + " has type " +
                  d_.PrintType(args[i].ty) + ", annotated " +
                  d_.PrintType((*syn.input_types)[i]));
        }
      }
    }
    if (op.result_types) {
      if (op.result_types->size() != 1) {
        throw ElaborationError(ElabErrorKind::kTypeMismatch, op.loc,
                               "operations produce exactly one result");
      }
      syn.result_type = ResolveType(op.result_types->front(), op.loc);
    }
    if (op.short_type) {
      syn.result_type = ResolveType(*op.short_type, op.loc);
      syn.short_type = true;
    }
    syn.num_regions = op.regions.size();

    Op built;
    try {
      built = d_.BuildOp(syn);
    } catch (const ElaborationError&) {
      throw;
    } catch (const ElabError& ex) {
      throw ElaborationError(ex.kind(), op.loc, ex.what());
    }
    auto sig = d_.Signature(built);
    if (!sig) {
      throw ElaborationError(ElabErrorKind::kUnknownOp, op.loc,
                             "unknown operation '" + op.name +
                                 "' in dialect " + d_.name());
    }
    if (sig->args.size() != args.size()) {
      throw ElaborationError(
          ElabErrorKind::kTypeMismatch, op.loc,
          "'" + op.name + "' expects " + std::to_string(sig->args.size()) +
              " operands, got " + std::to_string(args.size()));
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (!(sig->args[i] == args[i].ty)) {
        throw ElaborationError(
            ElabErrorKind::kTypeMismatch, op.operands[i].loc,
            "operand %" + op.operands[i].name + " of '" + op.name +
                "' has type " + d_.PrintType(args[i].ty) + ", expected " +
                d_.PrintType(sig->args[i]));
      }
    }
    if (syn.result_type && !(*syn.result_type == sig->out)) {
      // A short annotation may name the operand type instead (`icmp`).
      bool operand_form = syn.short_type && !args.empty() &&
                          *syn.result_type == args[0].ty;
      if (!operand_form) {
        throw ElaborationError(
            ElabErrorKind::kTypeMismatch, op.loc,
            "'" + op.name + "' produces " + d_.PrintType(sig->out) +
                ", annotated " + d_.PrintType(*syn.result_type));
      }
    }
    if (sig->regions.size() != op.regions.size()) {
      throw ElaborationError(
          ElabErrorKind::kRegionSignature, op.loc,
          "'" + op.name + "' takes " + std::to_string(sig->regions.size()) +
              " regions, got " + std::to_string(op.regions.size()));
    }
    Expr e;
    e.op = std::move(built);
    e.ty = sig->out;
    e.args = std::move(args);
    for (std::size_t r = 0; r < op.regions.size(); ++r) {
      Program body = Block(op.regions[r], true);
      const RegionSig& rs = sig->regions[r];
      if (!(body.ctxt == rs.entry)) {
        throw ElaborationError(
            ElabErrorKind::kRegionSignature, op.regions[r].loc,
            "region " + std::to_string(r) + " of '" + op.name +
                "' has arguments " + TypesToString(d_, body.ctxt.types()) +
                ", expected " + TypesToString(d_, rs.entry.types()));
      }
      if (!(body.com.RetType() == rs.ret)) {
        throw ElaborationError(
            ElabErrorKind::kRegionSignature, op.regions[r].end_loc,
            "region " + std::to_string(r) + " of '" + op.name +
                "' yields " + d_.PrintType(body.com.RetType()) +
                ", expected " + d_.PrintType(rs.ret));
      }
      e.regions.push_back(std::move(body.com));
    }
    return e;
  }

  const Dialect& d_;
  const ElabParams& params_;
};

}  // namespace

BigInt EvalIntExpr(const IntExpr& e, const ElabParams& params) {
  auto check = [&](BigInt v) {
    if (v != 0 && boost::multiprecision::msb(abs(v)) >= kMaxAttrBits) {
      throw ElaborationError(ElabErrorKind::kMalformedAttr, e.loc,
                             "attribute value is too large");
    }
    return v;
  };
  switch (e.kind) {
    case IntExpr::Kind::kLit:
      return check(e.lit);
    case IntExpr::Kind::kSym: {
      auto it = params.symbols.find(e.sym);
      if (it == params.symbols.end()) {
        throw ElaborationError(ElabErrorKind::kMalformedAttr, e.loc,
                               "unbound symbol '" + e.sym +
                                   "' in attribute expression");
      }
      return it->second;
    }
    case IntExpr::Kind::kNeg:
      return -EvalIntExpr(e.kids[0], params);
    case IntExpr::Kind::kAdd:
      return check(EvalIntExpr(e.kids[0], params) +
                   EvalIntExpr(e.kids[1], params));
    case IntExpr::Kind::kSub:
      return check(EvalIntExpr(e.kids[0], params) -
                   EvalIntExpr(e.kids[1], params));
    case IntExpr::Kind::kMul:
      return check(EvalIntExpr(e.kids[0], params) *
                   EvalIntExpr(e.kids[1], params));
    case IntExpr::Kind::kPow: {
      BigInt base = EvalIntExpr(e.kids[0], params);
      BigInt exp = EvalIntExpr(e.kids[1], params);
      if (exp < 0) {
        throw ElaborationError(ElabErrorKind::kMalformedAttr, e.loc,
                               "negative exponent");
      }
      if (base == 0 || base == 1 || exp == 0) return exp == 0 ? 1 : base;
      if (base == -1) return (exp % 2 == 0) ? BigInt(1) : BigInt(-1);
      unsigned bits = boost::multiprecision::msb(abs(base)) + 1;
      if (exp > kMaxAttrBits / bits) {
        throw ElaborationError(ElabErrorKind::kMalformedAttr, e.loc,
                               "attribute value is too large");
      }
      return check(boost::multiprecision::pow(base,
                                              static_cast<unsigned>(exp)));
    }
  }
  return 0;
}

Program Elaborate(const Dialect& dialect, const GenericAst& ast,
                  const ElabParams& params) {
  Program out = Elaborator(dialect, params).Block(ast.body, false);
  auto errors = TypeCheck(dialect, out.ctxt, out.com);
  if (!errors.empty()) {
    throw ElaborationError(ElabErrorKind::kTypeMismatch, ast.body.loc,
                           "elaborated program is ill-typed: " +
                               errors.front().ToString());
  }
  return out;
}

Program ParseProgram(const Dialect& dialect, std::string_view text,
                     const ElabParams& params) {
  return Elaborate(dialect, Parse(text), params);
}

}  // namespace ssair::syntax
