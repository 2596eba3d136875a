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

#ifndef GAF_SCRIPT_HPP_
#define GAF_SCRIPT_HPP_

#include <optional>
#include <string>

#include "gaf/runtime.hpp"

namespace gaf::runtime {

// Executes event-script commands one line at a time against an engine:
//   create <instance> <database> <configuration> <gaproc>
//   event <name>
//   behave
//   invoke <feature> [<integer>|"<string>"]
//   store <key> = <integer>|"<string>"
//   dump
// `#` starts a comment; blank lines are no-ops. A session drives exactly
// one instance: a second `create`, or any other command before `create`,
// is a script error. Also used by the interactive REPL, which continues
// after failed lines instead of aborting.
class ScriptSession {
 public:
  explicit ScriptSession(Engine& engine) : engine_(engine) {}

  // Runs one line. Returns false when the line produced an ERROR record
  // (script error or failed engine operation).
  bool execute_line(const std::string& raw_line, int line_no);

  Engine& engine() { return engine_; }
  std::optional<SoftwareInstance>& instance() { return instance_; }

 private:
  Engine& engine_;
  std::optional<SoftwareInstance> instance_;
};

struct ScriptResult {
  int exit_code = 0;  // 0: ran to completion; 1: aborted on first error
  std::optional<SoftwareInstance> instance;  // final instance state, if any
};

// Runs a whole script, aborting at the first ERROR trace record.
ScriptResult run_script(Engine& engine, const std::string& script_text);

}  // namespace gaf::runtime

#endif  // GAF_SCRIPT_HPP_
