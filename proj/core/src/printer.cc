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

#include "ssair/syntax/printer.h"

#include <sstream>

namespace ssair::syntax {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string PrintAttr(const Attribute& a) {
  if (const auto* i = std::get_if<BigInt>(&a)) return i->str();
  if (const auto* s = std::get_if<std::string>(&a)) return Quote(*s);
  if (const auto* b = std::get_if<bool>(&a)) return *b ? "true" : "false";
  std::string out = "[";
  const auto& v = std::get<std::vector<BigInt>>(a);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

class Printer {
 public:
  explicit Printer(const Dialect& d) : d_(d) {}

  void Block(const Ctxt& ctxt, const Com& com, bool in_region, int indent) {
    std::vector<std::string> names;
    Pad(indent - 2);
    os_ << "^bb0(";
    for (std::size_t i = 0; i < ctxt.size(); ++i) {
      if (i) os_ << ", ";
      names.push_back(Fresh());
      os_ << names.back() << " : " << d_.PrintType(ctxt[i]);
    }
    os_ << "):\n";
    for (const Expr& e : com.lets) {
      std::string self = Fresh();
      Pad(indent);
      os_ << self << " = " << Quote(e.op.name) << "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os_ << ", ";
        os_ << names[e.args[i].index];
      }
      os_ << ")";
      if (!e.regions.empty()) {
        auto sig = d_.Signature(e.op);
        os_ << " (";
        for (std::size_t r = 0; r < e.regions.size(); ++r) {
          if (r) os_ << ", ";
          os_ << "{\n";
          Block(sig->regions[r].entry, e.regions[r], true, indent + 2);
          Pad(indent);
          os_ << "}";
        }
        os_ << ")";
      }
      if (!e.op.attrs.empty()) {
        os_ << " {";
        bool first = true;
        for (const auto& [k, v] : e.op.attrs) {
          if (!first) os_ << ", ";
          first = false;
          os_ << k << " = " << PrintAttr(v);
        }
        os_ << "}";
      }
      os_ << " : (";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) os_ << ", ";
        os_ << d_.PrintType(e.args[i].ty);
      }
      os_ << ") -> " << d_.PrintType(e.ty) << "\n";
      names.push_back(self);
    }
    Pad(indent);
    os_ << Quote(d_.TerminatorName(in_region)) << "("
        << names[com.ret.index] << ") : (" << d_.PrintType(com.ret.ty)
        << ") -> ()\n";
  }

  std::string Take() { return os_.str(); }

  std::ostringstream& os() { return os_; }

 private:
  std::string Fresh() { return "%" + std::to_string(next_++); }
  void Pad(int n) {
    for (int i = 0; i < n; ++i) os_ << ' ';
  }

  const Dialect& d_;
  std::ostringstream os_;
  unsigned next_ = 0;
};

}  // namespace

std::string Print(const Dialect& dialect, const Ctxt& ctxt, const Com& com) {
  Printer p(dialect);
  p.os() << "{\n";
  p.Block(ctxt, com, false, 2);
  p.os() << "}\n";
  return p.Take();
}

}  // namespace ssair::syntax
