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

#ifndef SSAIR_SYNTAX_PRINTER_H_
#define SSAIR_SYNTAX_PRINTER_H_

#include <string>

#include "ssair/ir/com.h"
#include "ssair/ir/dialect.h"

namespace ssair::syntax {

// Generic-form text with numeric value names. Names keep counting up
// through nested regions, so no name is ever reused. Parsing and
// elaborating the output gives back a structurally equal program.
std::string Print(const Dialect& dialect, const Ctxt& ctxt, const Com& com);

}  // namespace ssair::syntax

#endif  // SSAIR_SYNTAX_PRINTER_H_
