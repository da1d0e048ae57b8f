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

#include "ssair/ir/com.h"

#include <functional>
#include <sstream>

namespace ssair {
namespace {

std::size_t Combine(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

std::string AttributeToString(const Attribute& a) {
  struct Printer {
    std::string operator()(const BigInt& i) const { return i.str(); }
    std::string operator()(const std::string& s) const {
      return "\"" + s + "\"";
    }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::vector<BigInt>& v) const {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
      }
      return out + "]";
    }
  };
  return std::visit(Printer{}, a);
}

bool operator==(const Expr& a, const Expr& b) {
  return a.op == b.op && a.ty == b.ty && a.args == b.args &&
         a.regions == b.regions;
}

bool operator==(const Com& a, const Com& b) {
  return a.ret == b.ret && a.lets == b.lets;
}

Ctxt OutCtxt(const Ctxt& ctxt, const std::vector<Expr>& lets) {
  Ctxt out = ctxt;
  for (const Expr& e : lets) out.PushBack(e.ty);
  return out;
}

Ctxt OutCtxt(const Ctxt& ctxt, const Com& com) {
  return OutCtxt(ctxt, com.lets);
}

std::size_t HashValue(const Attribute& a) {
  struct Hasher {
    std::size_t operator()(const BigInt& i) const {
      return std::hash<std::string>{}(i.str());
    }
    std::size_t operator()(const std::string& s) const {
      return std::hash<std::string>{}(s) * 7;
    }
    std::size_t operator()(bool b) const { return b ? 11 : 13; }
    std::size_t operator()(const std::vector<BigInt>& v) const {
      std::size_t h = v.size();
      for (const auto& e : v) h = Combine(h, std::hash<std::string>{}(e.str()));
      return h;
    }
  };
  return Combine(a.index(), std::visit(Hasher{}, a));
}

std::size_t HashValue(const Op& op) {
  std::size_t h = std::hash<std::string>{}(op.name);
  h = Combine(h, HashValue(op.type));
  for (const auto& [k, v] : op.attrs) {
    h = Combine(h, std::hash<std::string>{}(k));
    h = Combine(h, HashValue(v));
  }
  return h;
}

std::size_t HashValue(const Expr& e) {
  std::size_t h = HashValue(e.op);
  h = Combine(h, HashValue(e.ty));
  for (const Var& v : e.args) h = Combine(h, v.index);
  for (const Com& r : e.regions) h = Combine(h, HashValue(r));
  return h;
}

std::size_t HashValue(const Com& c) {
  std::size_t h = Combine(c.lets.size(), c.ret.index);
  for (const Expr& e : c.lets) h = Combine(h, HashValue(e));
  return h;
}

std::string DebugString(const Expr& e) {
  std::ostringstream os;
  os << e.op.name;
  if (!e.op.type.empty()) os << '<' << DebugString(e.op.type) << '>';
  os << '(';
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) os << ", ";
    os << '%' << e.args[i].index;
  }
  os << ')';
  if (!e.op.attrs.empty()) {
    os << " {";
    bool first = true;
    for (const auto& [k, v] : e.op.attrs) {
      if (!first) os << ", ";
      first = false;
      os << k << " = " << AttributeToString(v);
    }
    os << '}';
  }
  for (const Com& r : e.regions) os << " {" << DebugString(r) << '}';
  os << " : " << DebugString(e.ty);
  return os.str();
}

std::string DebugString(const Com& c) {
  std::ostringstream os;
  for (const Expr& e : c.lets) os << DebugString(e) << "; ";
  os << "ret %" << c.ret.index;
  return os.str();
}

}  // namespace ssair
