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

#include "ssair/ir/typecheck.h"

namespace ssair {

const char* ToString(TypeErrorKind kind) {
  switch (kind) {
    case TypeErrorKind::kUnknownOp:
      return "unknown-op";
    case TypeErrorKind::kArity:
      return "arity";
    case TypeErrorKind::kTypeMismatch:
      return "type-mismatch";
    case TypeErrorKind::kOutOfRange:
      return "out-of-range";
    case TypeErrorKind::kRegionMismatch:
      return "region-signature";
    case TypeErrorKind::kInvalidType:
      return "invalid-type";
  }
  return "?";
}

std::string TypeError::ToString() const {
  return "[" + position + "] " + ssair::ToString(kind) + ": " + message;
}

namespace {

class Checker {
 public:
  Checker(const Dialect& dialect, std::vector<TypeError>& errors)
      : dialect_(dialect), errors_(errors) {}

  void CheckCom(const Ctxt& ctxt, const Com& com, const std::string& prefix) {
    Ctxt cur = ctxt;
    for (std::size_t i = 0; i < com.lets.size(); ++i) {
      CheckExpr(cur, com.lets[i], prefix + std::to_string(i));
      cur.PushBack(com.lets[i].ty);
    }
    CheckVar(cur, com.ret, prefix + "ret", "returned variable");
  }

 private:
  void Report(TypeErrorKind kind, const std::string& pos, std::string msg) {
    errors_.push_back({kind, pos, std::move(msg)});
  }

  void CheckVar(const Ctxt& ctxt, const Var& v, const std::string& pos,
                const std::string& what) {
    if (v.index >= ctxt.size()) {
      Report(TypeErrorKind::kOutOfRange, pos,
             what + " %" + std::to_string(v.index) +
                 " is out of range for a context of size " +
                 std::to_string(ctxt.size()));
    } else if (!(ctxt[v.index] == v.ty)) {
      Report(TypeErrorKind::kTypeMismatch, pos,
             what + " %" + std::to_string(v.index) + " is annotated " +
                 dialect_.PrintType(v.ty) + " but the context has " +
                 dialect_.PrintType(ctxt[v.index]));
    }
  }

  void CheckExpr(const Ctxt& ctxt, const Expr& e, const std::string& pos) {
    auto sig = dialect_.Signature(e.op);
    if (!sig) {
      Report(TypeErrorKind::kUnknownOp, pos,
             "operation '" + e.op.name + "' is not defined by dialect " +
                 dialect_.name());
      return;
    }
    if (!dialect_.IsValidType(e.ty)) {
      Report(TypeErrorKind::kInvalidType, pos,
             "result type " + DebugString(e.ty) + " is not a concrete " +
                 dialect_.name() + " type");
    }
    if (!(sig->out == e.ty)) {
      Report(TypeErrorKind::kTypeMismatch, pos,
             e.op.name + " returns " + dialect_.PrintType(sig->out) +
                 " but the binding is typed " + dialect_.PrintType(e.ty));
    }
    if (sig->args.size() != e.args.size()) {
      Report(TypeErrorKind::kArity, pos,
             e.op.name + " expects " + std::to_string(sig->args.size()) +
                 " operands, got " + std::to_string(e.args.size()));
    } else {
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        std::string what = "operand " + std::to_string(i);
        CheckVar(ctxt, e.args[i], pos, what);
        if (!(e.args[i].ty == sig->args[i])) {
          Report(TypeErrorKind::kTypeMismatch, pos,
                 e.op.name + " " + what + " must be " +
                     dialect_.PrintType(sig->args[i]) + ", got " +
                     dialect_.PrintType(e.args[i].ty));
        }
      }
    }
    if (sig->regions.size() != e.regions.size()) {
      Report(TypeErrorKind::kRegionMismatch, pos,
             e.op.name + " expects " + std::to_string(sig->regions.size()) +
                 " regions, got " + std::to_string(e.regions.size()));
      return;
    }
    for (std::size_t r = 0; r < e.regions.size(); ++r) {
      const RegionSig& rs = sig->regions[r];
      const Com& body = e.regions[r];
      std::string rpos = pos + "/r" + std::to_string(r) + "/";
      if (!(body.RetType() == rs.ret)) {
        Report(TypeErrorKind::kRegionMismatch, rpos + "ret",
               "region returns " + dialect_.PrintType(body.RetType()) +
                   " but " + e.op.name + " expects " +
                   dialect_.PrintType(rs.ret));
      }
      CheckCom(rs.entry, body, rpos);
    }
  }

  const Dialect& dialect_;
  std::vector<TypeError>& errors_;
};

}  // namespace

std::vector<TypeError> TypeCheck(const Dialect& dialect, const Ctxt& ctxt,
                                 const Com& com) {
  std::vector<TypeError> errors;
  for (std::size_t i = 0; i < ctxt.size(); ++i) {
    if (!dialect.IsValidType(ctxt[i])) {
      errors.push_back({TypeErrorKind::kInvalidType, "ctxt",
                        "context slot " + std::to_string(i) + " has type " +
                            DebugString(ctxt[i]) +
                            ", which is not a concrete " + dialect.name() +
                            " type"});
    }
  }
  Checker(dialect, errors).CheckCom(ctxt, com, "");
  return errors;
}

void CheckWellTyped(const Dialect& dialect, const Ctxt& ctxt,
                    const Com& com) {
  auto errors = TypeCheck(dialect, ctxt, com);
  if (errors.empty()) return;
  std::string msg = "ill-typed program:";
  for (const auto& e : errors) msg += "\n  " + e.ToString();
  throw IrError(msg);
}

}  // namespace ssair
