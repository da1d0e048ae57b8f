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


#include "ssair/tools/cli.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssair/dialects/all.h"
#include "ssair/ir/interpreter.h"
#include "ssair/ir/typecheck.h"
#include "ssair/passes/passes.h"
#include "ssair/syntax/elaborate.h"
#include "ssair/syntax/printer.h"
#include "ssair/tools/llvm_diff.h"
#include "ssair/verify/registry.h"

namespace ssair::tools {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse or elaboration error, already prefixed with "file:line:col: ".
class SourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Flags {
  std::string dialect;
  std::optional<unsigned> width;
  std::uint64_t q = 7;
  unsigned n = 1;

  void Add(CLI::App* cmd, bool with_width = true) {
    cmd->add_option("--dialect", dialect, "llvm, arith, scf or poly")
        ->required()
        ->check(CLI::IsMember({"llvm", "arith", "scf", "poly"}));
    if (with_width) cmd->add_option("--width", width, "value of the i_ placeholder");
    cmd->add_option("--q", q, "poly coefficient modulus")->capture_default_str();
    cmd->add_option("--n", n, "poly ring degree is 2^n")->capture_default_str();
  }

  DialectConfig Config(std::optional<unsigned> w) const {
    DialectConfig c;
    c.kind = *ParseDialectKind(dialect);
    c.width = w;
    c.q = q;
    c.n = n;
    return c;
  }
};

syntax::Program Load(const DialectInstance& inst, const std::string& path) {
  std::string text = ReadFile(path);
  try {
    return syntax::ParseProgram(*inst.dialect, text, inst.params);
  } catch (const syntax::ParseError& e) {
    throw SourceError(path + ":" + e.what());
  } catch (const syntax::ElaborationError& e) {
    throw SourceError(path + ":" + e.what());
  }
}

// Prints and proves the text reads back as the same program.
std::string PrintChecked(const DialectInstance& inst, const Ctxt& ctxt,
                         const Com& com) {
  CheckWellTyped(*inst.dialect, ctxt, com);
  std::string text = syntax::Print(*inst.dialect, ctxt, com);
  syntax::Program back = syntax::ParseProgram(*inst.dialect, text, inst.params);
  if (!(back.ctxt == ctxt) || !(back.com == com)) {
    throw std::logic_error("printed program does not read back identically");
  }
  return text;
}

int CmdParse(const std::string& file, const Flags& f, std::ostream& out) {
  DialectConfig c = f.Config(f.width);
  DialectInstance inst = MakeDialect(c);
  syntax::Program p = Load(inst, file);
  out << PrintChecked(inst, p.ctxt, p.com) << "\n";
  return 0;
}

int CmdOpt(const std::string& file, const Flags& f,
           const std::vector<std::string>& rewrite_names, std::size_t fuel,
           const std::vector<std::string>& passes, std::ostream& out,
           std::ostream& err) {
  DialectConfig c = f.Config(f.width);
  DialectInstance inst = MakeDialect(c);
  const Dialect& d = *inst.dialect;
  syntax::Program p = Load(inst, file);
  Ctxt ctxt = p.ctxt;
  Com com = p.com;

  if (!rewrite_names.empty()) {
    std::vector<PeepholeRewrite> rws;
    for (const std::string& name : rewrite_names)
      rws.push_back(DefaultRegistry().Get(c, d, name));
    RewriteStats stats;
    com = RewritePeepholeAll(d, fuel, rws, ctxt, com, &stats);
    err << "rewrites applied: " << stats.applied << "\n";
  }
  for (const std::string& pass : passes) {
    if (pass == "dce") {
      com = Dce(d, ctxt, com).com;
    } else if (pass == "cse") {
      com = Cse(d, ctxt, com);
    } else if (c.kind == DialectKind::kScf &&
               (pass == "dead-loop" || pass == "if-const" ||
                pass == "loop-fusion" || pass == "loop-reversal")) {
      const auto& scf = dynamic_cast<const ScfDialect&>(d);
      ScfTransformResult r = pass == "dead-loop"  ? DeadLoopElim(scf, ctxt, com)
                             : pass == "if-const" ? IfConstFold(scf, ctxt, com)
                             : pass == "loop-fusion"
                                 ? LoopFusion(scf, ctxt, com)
                                 : LoopReversal(scf, ctxt, com);
      err << pass << ": " << r.applied << " site(s)\n";
      com = std::move(r.com);
    } else {
      throw UsageError("unknown pass '" + pass + "'");
    }
  }
  out << PrintChecked(inst, ctxt, com) << "\n";
  return 0;
}

int CmdRun(const std::string& file, const Flags& f, const std::string& inputs,
           std::ostream& out) {
  DialectInstance inst = MakeDialect(f.Config(f.width));
  syntax::Program p = Load(inst, file);
  std::vector<std::string> parts = SplitTopLevel(inputs);
  if (parts.size() != p.ctxt.size()) {
    throw UsageError("the program takes " + std::to_string(p.ctxt.size()) +
                     " input(s), got " + std::to_string(parts.size()));
  }
  Valuation v;
  for (std::size_t i = 0; i < parts.size(); ++i)
    v.PushBack(inst.dialect->ParseValue(p.ctxt[i], parts[i]));
  out << DenoteCom(*inst.dialect, p.com, v).ToString() << "\n";
  return 0;
}

struct VerifyArgs {
  std::string src, tgt, mode = "exact", widths = "1..4", strategy = "auto",
                        name;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

int CmdVerify(const VerifyArgs& a, const Flags& f, std::ostream& out) {
  const CheckMode mode = a.mode == "refine" ? CheckMode::kRefine : CheckMode::kExact;
  const DialectKind kind = *ParseDialectKind(f.dialect);
  std::vector<std::optional<unsigned>> instances;
  if (kind == DialectKind::kLlvm) {
    for (unsigned w : ParseWidthList(a.widths)) instances.push_back(w);
  } else {
    instances.push_back(std::nullopt);
  }
  const std::string name =
      a.name.empty() ? std::filesystem::path(a.src).stem().string() : a.name;
  bool all_passed = true;
  for (const auto& w : instances) {
    DialectConfig c = f.Config(w);
    DialectInstance inst = MakeDialect(c);
    syntax::Program src = Load(inst, a.src);
    syntax::Program tgt = Load(inst, a.tgt);
    if (!(src.ctxt == tgt.ctxt)) {
      throw UsageError("source and target take different arguments");
    }
    Exhaustive bounds = SmallExhaustive(8);
    Strategy strategy = Random{a.samples, a.seed};
    if (a.strategy == "exhaustive" ||
        (a.strategy == "auto" && [&] {
          try {
            CountValuations(*inst.dialect, src.ctxt, bounds);
            return true;
          } catch (const InfeasibleStrategy&) {
            return false;
          }
        }())) {
      strategy = bounds;
    }
    Verdict v;
    v.name = name;
    v.strategy = ToString(strategy);
    v.params = ParamString(c);
    CheckResult r = Check(
        CheckSpec{inst.dialect.get(), src.ctxt, src.com, tgt.com, mode, strategy});
    v.passed = r.passed();
    v.visited = r.visited;
    v.counterexample = r.counterexample;
    all_passed = all_passed && v.passed;
    out << v.ToString() << "\n";
  }
  if (kind == DialectKind::kLlvm) {
    out << "note: tested at widths " << a.widths
        << " only; other widths are not covered\n";
  }
  return all_passed ? 0 : 1;
}

int CmdLlvmDiff(const std::string& opt_path, const std::string& unary,
                const std::string& binary, std::ostream& out) {
  std::optional<std::string> tool = FindOptTool(opt_path);
  if (!tool) {
    out << "SKIP llvm-diff: no LLVM optimizer configured (use --opt-path or "
           "SSAIR_OPT)\n";
    return kSkipExitCode;
  }
  LlvmDiffOptions o;
  o.tool = *tool;
  o.unary_widths = ParseWidthList(unary);
  o.binary_widths = ParseWidthList(binary);
  LlvmDiffReport r = RunLlvmDiff(o);
  out << (r.agrees() ? "PASS" : "FAIL") << " llvm-diff tool=" << o.tool
      << " unary=" << unary << " binary=" << binary << " cases=" << r.cases
      << " equal=" << r.equal << " refined=" << r.refined
      << " mismatches=" << r.mismatches << "\n";
  for (const std::string& s : r.samples) out << "  " << s << "\n";
  return r.agrees() ? 0 : 1;
}

}  // namespace

std::vector<unsigned> ParseWidthList(const std::string& text) {
  std::vector<unsigned> out;
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(Trim(s), &pos);
    } catch (const std::exception&) {
      throw UsageError("bad width list '" + text + "'");
    }
    if (pos != Trim(s).size() || v == 0 || v > kLlvmMaxWidth) {
      throw UsageError("bad width list '" + text + "'");
    }
    return static_cast<unsigned>(v);
  };
  if (std::size_t dots = text.find(".."); dots != std::string::npos) {
    unsigned lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty width range '" + text + "'");
    for (unsigned w = lo; w <= hi; ++w) out.push_back(w);
    return out;
  }
  for (const std::string& part : SplitTopLevel(text)) out.push_back(num(part));
  return out;
}

std::vector<std::string> SplitTopLevel(const std::string& text) {
  std::vector<std::string> out;
  if (Trim(text).empty()) return out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(Trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(Trim(cur));
  return out;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"ssair: SSA IR with regions, peephole rewriting and checking"};
  app.require_subcommand(1);

  std::string file;
  Flags flags;

  CLI::App* parse = app.add_subcommand("parse", "parse, elaborate and print a program");
  parse->add_option("file", file, ".mlir input")->required();
  flags.Add(parse);

  std::vector<std::string> rewrites, passes;
  std::size_t fuel = 100;
  CLI::App* opt = app.add_subcommand("opt", "apply registry rewrites, then passes");
  opt->add_option("file", file, ".mlir input")->required();
  flags.Add(opt);
  opt->add_option("--rewrites", rewrites, "rewrite names")->delimiter(',');
  opt->add_option("--fuel", fuel, "bound on rewrite applications")->capture_default_str();
  opt->add_option("--passes", passes,
                  "dce, cse; for scf also dead-loop, if-const, loop-fusion, "
                  "loop-reversal")
      ->delimiter(',');

  std::string inputs;
  CLI::App* run = app.add_subcommand("run", "evaluate a program");
  run->add_option("file", file, ".mlir input")->required();
  flags.Add(run);
  run->add_option("--inputs", inputs, "comma-separated argument values");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "check that tgt equals or refines src");
  verify->add_option("src", va.src)->required();
  verify->add_option("tgt", va.tgt)->required();
  flags.Add(verify, /*with_width=*/false);
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"exact", "refine"}))->capture_default_str();
  verify->add_option("--widths", va.widths, "llvm widths, e.g. 1..4 or 1,8,64")->capture_default_str();
  verify->add_option("--strategy", va.strategy)->check(CLI::IsMember({"auto", "exhaustive", "random"}))->capture_default_str();
  verify->add_option("--samples", va.samples)->capture_default_str();
  verify->add_option("--seed", va.seed)->capture_default_str();
  verify->add_option("--name", va.name, "name used in verdict lines");

  std::string opt_path, unary = "1..8", binary = "1..4";
  CLI::App* diff = app.add_subcommand("llvm-diff", "compare llvm semantics with an external LLVM optimizer");
  diff->add_option("--opt-path", opt_path, "opt or clang binary (default: $SSAIR_OPT, then opt on PATH)");
  diff->add_option("--unary-widths", unary)->capture_default_str();
  diff->add_option("--binary-widths", binary)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code;
  }

  try {
    if (*parse) return CmdParse(file, flags, out);
    if (*opt) return CmdOpt(file, flags, rewrites, fuel, passes, out, err);
    if (*run) return CmdRun(file, flags, inputs, out);
    if (*verify) return CmdVerify(va, flags, out);
    if (*diff) return CmdLlvmDiff(opt_path, unary, binary, out);
  } catch (const SourceError& e) {
    err << e.what() << "\n";
  } catch (const ElabError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ToolError& e) {
    err << "llvm-diff: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 1;
}

}  // namespace ssair::tools
