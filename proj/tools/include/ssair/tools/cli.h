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


// The `ssair` command line: parse, opt, run, verify and llvm-diff.

#ifndef SSAIR_TOOLS_CLI_H_
#define SSAIR_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ssair::tools {

// args excludes the program name. Returns the process exit status.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

// "1..4" or "1,2,8".
std::vector<unsigned> ParseWidthList(const std::string& text);

// Splits on commas outside square brackets: "3, [1, 2]" -> {"3", "[1, 2]"}.
std::vector<std::string> SplitTopLevel(const std::string& text);

}  // namespace ssair::tools

#endif  // SSAIR_TOOLS_CLI_H_
