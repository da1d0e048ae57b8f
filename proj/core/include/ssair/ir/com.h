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

// Core program syntax: operations, let-bound expressions and commands.
//
// A Com over a context Gamma is a sequence of let bindings followed by a
// return. Variables use absolute positions: inside a Com over Gamma, indices
// [0, |Gamma|) are free and the k-th binding defines index |Gamma| + k.
// Region bodies are closed: a region's Com is typed under the entry context
// its operation's signature gives it, nothing else.

#ifndef SSAIR_IR_COM_H_
#define SSAIR_IR_COM_H_

#include <cstddef>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ssair/ir/bitvec.h"
#include "ssair/ir/type.h"

namespace ssair {

// Compile-time data attached to an opcode.
using Attribute =
    std::variant<BigInt, std::string, bool, std::vector<BigInt>>;

std::string AttributeToString(const Attribute& a);

// An opcode together with its attribute payload. `type` is the opcode's
// instantiation type (e.g. the bit width of an llvm op, the carried type of
// an scf.for); it takes part in equality like every attribute does.
struct Op {
  std::string name;
  Type type;
  std::map<std::string, Attribute> attrs;

  const Attribute* FindAttr(const std::string& key) const {
    auto it = attrs.find(key);
    return it == attrs.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Op&, const Op&) = default;
};

enum class EffectKind { kPure, kImpure };

struct RegionSig {
  Ctxt entry;
  Type ret;
  friend bool operator==(const RegionSig&, const RegionSig&) = default;
};

struct OpSignature {
  std::vector<Type> args;
  std::vector<RegionSig> regions;
  Type out;
  EffectKind effect = EffectKind::kPure;
};

struct Com;

struct Expr {
  Op op;
  Type ty;  // result type; equals the signature's out type once checked
  std::vector<Var> args;
  std::vector<Com> regions;
};

struct Com {
  std::vector<Expr> lets;
  Var ret;

  std::size_t NumBindings() const { return lets.size(); }
  const Type& RetType() const { return ret.ty; }
};

bool operator==(const Expr& a, const Expr& b);
bool operator==(const Com& a, const Com& b);

// The context at the end of `com`'s bindings: ctxt followed by each
// binding's result type.
Ctxt OutCtxt(const Ctxt& ctxt, const Com& com);
Ctxt OutCtxt(const Ctxt& ctxt, const std::vector<Expr>& lets);

std::size_t HashValue(const Attribute& a);
std::size_t HashValue(const Op& op);
std::size_t HashValue(const Expr& e);
std::size_t HashValue(const Com& c);

// Debug rendering with raw indices, independent of any dialect.
std::string DebugString(const Expr& e);
std::string DebugString(const Com& c);

}  // namespace ssair

#endif  // SSAIR_IR_COM_H_
