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

#ifndef SSAIR_IR_TYPE_H_
#define SSAIR_IR_TYPE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ssair {

// A dialect-defined type tag. `tag` names the type family ("i", "R",
// "int", ...); `param` carries its single numeric parameter (a bit width, a
// tensor length) or 0 when the family is unparameterized. A symbolic type
// stands for a width that has not been chosen yet; it only lives between
// parsing and elaboration.
class Type {
 public:
  Type() = default;
  explicit Type(std::string tag, std::int64_t param = 0)
      : tag_(std::move(tag)), param_(param) {}

  static Type Symbolic(std::string tag) {
    Type t(std::move(tag));
    t.symbolic_ = true;
    return t;
  }

  const std::string& tag() const { return tag_; }
  std::int64_t param() const { return param_; }
  bool symbolic() const { return symbolic_; }
  bool empty() const { return tag_.empty(); }

  friend bool operator==(const Type&, const Type&) = default;

 private:
  std::string tag_;
  std::int64_t param_ = 0;
  bool symbolic_ = false;
};

// Debug rendering; dialects own the surface syntax.
std::string DebugString(const Type& t);
std::ostream& operator<<(std::ostream& os, const Type& t);
std::size_t HashValue(const Type& t);

// An ordered list of types. Index 0 is the oldest binding.
class Ctxt {
 public:
  Ctxt() = default;
  Ctxt(std::initializer_list<Type> types) : types_(types) {}
  explicit Ctxt(std::vector<Type> types) : types_(std::move(types)) {}

  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }
  const Type& operator[](std::size_t i) const { return types_[i]; }
  const std::vector<Type>& types() const { return types_; }

  Ctxt Snoc(Type t) const {
    Ctxt out = *this;
    out.types_.push_back(std::move(t));
    return out;
  }
  void PushBack(Type t) { types_.push_back(std::move(t)); }

  auto begin() const { return types_.begin(); }
  auto end() const { return types_.end(); }

  friend bool operator==(const Ctxt&, const Ctxt&) = default;

 private:
  std::vector<Type> types_;
};

// A typed index into a context, counted from the front.
struct Var {
  std::uint32_t index = 0;
  Type ty;

  friend bool operator==(const Var&, const Var&) = default;
};

inline bool ValidIn(const Var& v, const Ctxt& ctxt) {
  return v.index < ctxt.size() && ctxt[v.index] == v.ty;
}

// Raised when a program or value breaks an invariant the caller was
// expected to establish (ill-typed input to a "checked" operation).
class IrError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ssair

#endif  // SSAIR_IR_TYPE_H_
