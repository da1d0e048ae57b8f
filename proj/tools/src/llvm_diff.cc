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


#include "ssair/tools/llvm_diff.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "ssair/verify/check.h"

namespace ssair::tools {
namespace {

namespace fs = std::filesystem;

bool IsExecutable(const fs::path& p) {
  std::error_code ec;
  return fs::is_regular_file(p, ec) && ::access(p.c_str(), X_OK) == 0;
}

std::string Literal(const Value& v, unsigned width) {
  if (v.IsPoison()) return "poison";
  if (width == 1) return v.AsBitVec().IsZero() ? "false" : "true";
  return v.AsBitVec().ToSigned().str();
}

std::string Ty(unsigned w) { return "i" + std::to_string(w); }

unsigned WidthOf(const Type& t) { return static_cast<unsigned>(t.param()); }

std::string Quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

std::string RunTool(const std::string& tool, const fs::path& input) {
  const bool is_clang = fs::path(tool).filename().string().find("clang") !=
                        std::string::npos;
  std::string cmd = Quote(tool) +
                    (is_clang ? " -x ir -O1 -S -emit-llvm -o - "
                              : " -S -passes=instsimplify -o - ") +
                    Quote(input.string()) + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw ToolError("cannot run " + tool);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = ::pclose(pipe);
  if (status != 0) {
    throw ToolError(tool + " failed:\n" + out.substr(0, 2000));
  }
  return out;
}

struct Case {
  Op op;
  std::vector<Value> args;
};

std::vector<Case> Cases(const LlvmDiffOptions& o) {
  LlvmDialect d;
  std::vector<Case> out;
  auto add = [&](unsigned w, const std::string& name, const std::string& pred) {
    Op op = LlvmOp(name, w, pred);
    Exhaustive bounds;
    bounds.limits.max_width = w;
    bounds.limits.max_universe = (std::uint64_t{1} << w) + 1;
    bounds.max_valuations = std::uint64_t{1} << 32;
    ForEachValuation(d, Ctxt(d.Signature(op)->args), bounds,
                     [&](const Valuation& v) {
                       out.push_back({op, v.values()});
                       return true;
                     });
  };
  for (const std::string& name : LlvmOpNames()) {
    const bool unary = LlvmArity(name) == 1;
    for (unsigned w : unary ? o.unary_widths : o.binary_widths) {
      if (name == "llvm.icmp") {
        for (const std::string& p : IcmpPredicates()) add(w, name, p);
      } else {
        add(w, name, "");
      }
    }
  }
  return out;
}

}  // namespace

std::optional<std::string> FindOptTool(const std::string& explicit_path) {
  if (!explicit_path.empty()) {
    if (IsExecutable(explicit_path)) return explicit_path;
    return std::nullopt;
  }
  if (const char* env = std::getenv("SSAIR_OPT"); env && *env) {
    if (IsExecutable(env)) return std::string(env);
    return std::nullopt;
  }
  if (const char* path = std::getenv("PATH")) {
    std::stringstream ss(path);
    std::string dir;
    while (std::getline(ss, dir, ':')) {
      fs::path p = fs::path(dir) / "opt";
      if (IsExecutable(p)) return p.string();
    }
  }
  return std::nullopt;
}

std::string EmitFunction(const std::string& fn, const Op& op,
                         const std::vector<Value>& args) {
  const unsigned w = WidthOf(op.type);
  const std::string base = op.name.substr(5);  // strip "llvm."
  std::string ret_ty = Ty(w), instr;
  if (base == "not") {
    instr = "xor " + Ty(w) + " " + Literal(args[0], w) + ", " +
            (w == 1 ? "true" : "-1");
  } else if (base == "select") {
    instr = "select i1 " + Literal(args[0], 1) + ", " + Ty(w) + " " +
            Literal(args[1], w) + ", " + Ty(w) + " " + Literal(args[2], w);
  } else if (base == "icmp") {
    ret_ty = "i1";
    instr = "icmp " + std::get<std::string>(*op.FindAttr("predicate")) + " " +
            Ty(w) + " " + Literal(args[0], w) + ", " + Literal(args[1], w);
  } else {
    instr = base + " " + Ty(w) + " " + Literal(args[0], w) + ", " +
            Literal(args[1], w);
  }
  return "define " + ret_ty + " @" + fn + "() {\n  %r = " + instr +
         "\n  ret " + ret_ty + " %r\n}\n";
}

Value ParseFoldedConstant(const std::string& tok, unsigned w) {
  if (tok == "poison") return PoisonValue(w);
  if (tok == "true") return IntValue(w, 1);
  if (tok == "false") return IntValue(w, 0);
  static const std::regex kInt("-?[0-9]+");
  if (!std::regex_match(tok, kInt)) {
    throw ToolError("unexpected folded value '" + tok + "'");
  }
  BigInt v(tok);
  BigInt m = BigInt(1) << w;
  v %= m;
  if (v < 0) v += m;
  return IntValue(w, v);
}

LlvmDiffReport RunLlvmDiff(const LlvmDiffOptions& o) {
  std::vector<Case> cases = Cases(o);
  fs::path dir = fs::temp_directory_path();
  fs::path file = dir / ("ssair-llvm-diff-" + std::to_string(::getpid()) + "-" +
                         std::to_string(std::random_device{}()) + ".ll");
  {
    std::ofstream os(file);
    for (std::size_t i = 0; i < cases.size(); ++i)
      os << EmitFunction("f" + std::to_string(i), cases[i].op, cases[i].args);
  }
  std::string out;
  try {
    out = RunTool(o.tool, file);
  } catch (...) {
    fs::remove(file);
    throw;
  }
  fs::remove(file);

  // define ... @f12() ... { ... ret <ty> <value>
  std::map<std::size_t, std::string> folded;
  static const std::regex kDefine(R"(define .*@f([0-9]+)\(\))");
  static const std::regex kRet(R"(^\s*ret i[0-9]+ (\S+)\s*$)");
  std::istringstream lines(out);
  std::string line;
  std::optional<std::size_t> current;
  std::smatch m;
  while (std::getline(lines, line)) {
    if (std::regex_search(line, m, kDefine)) {
      current = std::stoul(m[1].str());
    } else if (current && std::regex_match(line, m, kRet)) {
      folded[*current] = m[1].str();
      current.reset();
    }
  }

  LlvmDiffReport report;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    Value ours = LlvmDenote(c.op, c.args);
    const unsigned w = WidthOf(ours.type());
    auto it = folded.find(i);
    if (it == folded.end()) {
      throw ToolError("no folded result for f" + std::to_string(i) + ":\n" +
                      EmitFunction("f", c.op, c.args));
    }
    if (it->second.starts_with("%")) {
      throw ToolError("the tool did not fold f" + std::to_string(i));
    }
    Value theirs = ParseFoldedConstant(it->second, w);
    ++report.cases;
    if (ours == theirs) {
      ++report.equal;
    } else if (ours.IsPoison()) {
      ++report.refined;
    } else {
      ++report.mismatches;
      if (report.samples.size() < 10) {
        std::string s = c.op.name;
        if (const Attribute* p = c.op.FindAttr("predicate"))
          s += " " + AttributeToString(*p);
        s += " i" + std::to_string(WidthOf(c.op.type)) + " (";
        for (std::size_t k = 0; k < c.args.size(); ++k)
          s += (k ? ", " : "") + c.args[k].ToString();
        s += "): ours " + ours.ToString() + ", tool " + it->second;
        report.samples.push_back(s);
      }
    }
  }
  return report;
}

}  // namespace ssair::tools
