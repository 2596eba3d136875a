// Copyright 2026 The GAF Authors.
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

#ifndef GAF_DIAGNOSTICS_HPP_
#define GAF_DIAGNOSTICS_HPP_

#include <string>
#include <vector>

namespace gaf {

/// A position in a source file. Line and column are 1-based; a
/// default-constructed location (line 0) marks nodes that were built
/// programmatically rather than parsed.
struct SourceLoc {
  std::string file;
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
};

enum class Severity { kError, kWarning };

/// One validation or parse finding. Tests and tools match on `code`,
/// which is stable across releases; `message` is free-form human text.
struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceLoc location;
};

inline Diagnostic make_error(std::string code, std::string message,
                             SourceLoc loc) {
  return Diagnostic{Severity::kError, std::move(code), std::move(message),
                    std::move(loc)};
}

inline Diagnostic make_warning(std::string code, std::string message,
                               SourceLoc loc) {
  return Diagnostic{Severity::kWarning, std::move(code), std::move(message),
                    std::move(loc)};
}

/// Renders `<file>:<line>:<col>: <severity>[<code>]: <message>`.
std::string format_diagnostic(const Diagnostic& diag);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace gaf

#endif  // GAF_DIAGNOSTICS_HPP_
