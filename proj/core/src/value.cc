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

#include "ssair/ir/value.h"

#include <functional>
#include <sstream>

namespace ssair {

std::string DebugString(const Type& t) {
  if (t.empty()) return "<none>";
  std::string out = t.tag();
  if (t.symbolic()) return out + "<_>";
  if (t.param() != 0) out += "<" + std::to_string(t.param()) + ">";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Type& t) {
  return os << DebugString(t);
}

std::size_t HashValue(const Type& t) {
  return std::hash<std::string>{}(t.tag()) * 31 +
         std::hash<std::int64_t>{}(t.param()) + (t.symbolic() ? 7 : 0);
}

namespace {

template <typename T>
const T& Get(const Payload& p, const char* what, const Type& ty) {
  if (const T* v = std::get_if<T>(&p)) return *v;
  throw IrError(std::string("value of type ") + DebugString(ty) +
                " does not hold a " + what);
}

}  // namespace

const BitVec& Value::AsBitVec() const {
  return Get<BitVec>(payload_, "bitvector", ty_);
}
const BigInt& Value::AsInt() const {
  return Get<BigInt>(payload_, "integer", ty_);
}
bool Value::AsBool() const { return Get<bool>(payload_, "boolean", ty_); }
const RingElem& Value::AsRing() const {
  return Get<RingElem>(payload_, "ring element", ty_);
}
const IntTensor& Value::AsTensor() const {
  return Get<IntTensor>(payload_, "tensor", ty_);
}

std::string Value::ToString() const {
  struct Printer {
    std::string operator()(Poison) const { return "poison"; }
    std::string operator()(const BitVec& b) const { return b.ToString(); }
    std::string operator()(const BigInt& i) const { return i.str(); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const RingElem& r) const { return r.ToString(); }
    std::string operator()(const IntTensor& t) const {
      std::string out = "[";
      for (std::size_t i = 0; i < t.elems.size(); ++i) {
        if (i) out += ", ";
        out += t.elems[i].str();
      }
      return out + "]";
    }
  };
  return std::visit(Printer{}, payload_);
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  return os << v.ToString();
}

std::size_t HashValue(const Value& v) {
  struct Hasher {
    std::size_t operator()(Poison) const { return 0x5eed; }
    std::size_t operator()(const BitVec& b) const { return HashValue(b); }
    std::size_t operator()(const BigInt& i) const {
      return std::hash<std::string>{}(i.str());
    }
    std::size_t operator()(bool b) const { return b ? 3 : 5; }
    std::size_t operator()(const RingElem& r) const { return HashValue(r); }
    std::size_t operator()(const IntTensor& t) const {
      std::size_t h = t.elems.size();
      for (const auto& e : t.elems) h = h * 131 + std::hash<std::string>{}(e.str());
      return h;
    }
  };
  return HashValue(v.type()) ^ (std::visit(Hasher{}, v.payload()) << 1);
}

const Value& Valuation::Lookup(const Var& v) const {
  if (v.index >= values_.size()) {
    throw IrError("variable %" + std::to_string(v.index) +
                  " is out of range for a valuation of size " +
                  std::to_string(values_.size()));
  }
  const Value& val = values_[v.index];
  if (!(val.type() == v.ty)) {
    throw IrError("variable %" + std::to_string(v.index) + " has type " +
                  DebugString(v.ty) + " but the valuation holds " +
                  DebugString(val.type()));
  }
  return val;
}

bool Valuation::Inhabits(const Ctxt& ctxt) const {
  if (ctxt.size() != values_.size()) return false;
  for (std::size_t i = 0; i < ctxt.size(); ++i)
    if (!(values_[i].type() == ctxt[i])) return false;
  return true;
}

std::string Valuation::ToString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ", ";
    os << '%' << i << " = " << values_[i].ToString();
  }
  os << ')';
  return os.str();
}

}  // namespace ssair
