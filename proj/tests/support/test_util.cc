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


#include "support/test_util.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ssair::testing {

syntax::Program Parse(const Dialect& d, std::string_view text,
                      const ElabParams& params) {
  return syntax::ParseProgram(d, text, params);
}

ElabParams Width(unsigned w) {
  ElabParams p;
  p.width = w;
  return p;
}

DialectConfig ConfigFromFlags(const std::string& flags) {
  DialectConfig c;
  std::istringstream in(flags);
  std::string key, value;
  while (in >> key >> value) {
    if (key == "--dialect") {
      c.kind = *ParseDialectKind(value);
    } else if (key == "--width") {
      c.width = static_cast<unsigned>(std::stoul(value));
    } else if (key == "--q") {
      c.q = std::stoull(value);
    } else if (key == "--n") {
      c.n = static_cast<unsigned>(std::stoul(value));
    } else {
      throw std::runtime_error("unknown corpus flag " + key);
    }
  }
  return c;
}

std::vector<CorpusEntry> LoadCorpus() {
  namespace fs = std::filesystem;
  std::vector<CorpusEntry> out;
  for (const auto& f : fs::directory_iterator(SSAIR_CORPUS_DIR)) {
    if (f.path().extension() != ".mlir") continue;
    std::ifstream in(f.path());
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    const std::string marker = "// ssair:";
    if (text.rfind(marker, 0) != 0) {
      throw std::runtime_error(f.path().string() + " lacks a flags line");
    }
    std::string flags = text.substr(marker.size(), text.find('\n') - marker.size());
    out.push_back({f.path().stem().string(), ConfigFromFlags(flags), text});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  return out;
}

}  // namespace ssair::testing
