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

#ifndef GAF_REGISTRIES_HPP_
#define GAF_REGISTRIES_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaf/diagnostics.hpp"
#include "gaf/model.hpp"
#include "gaf/value.hpp"

namespace gaf::runtime {

// Internal failure signal for handlers, transitions and engine operations.
// Thrown inside, caught at every public operation boundary and converted to
// an ERROR trace record; never escapes the runtime API.
struct RuntimeError {
  std::string code;
  std::string detail;
};

// Executable binding for one feature: receives the instance store and an
// optional input value, returns the output value. May throw RuntimeError
// (code "handler-error") and may mutate the store.
using Handler = std::function<Value(Store&, const std::optional<Value>&)>;

class FeatureRegistry {
 public:
  void bind(FeatureId feature, Handler handler);
  const Handler* find(const FeatureId& feature) const;

  // The list-operation handlers working on store key "items": PutAtEnd,
  // PutAtBeg, GetFromBeg, GetFromEnd, Empty, InsertAt, GetAt. InsertAt
  // inserts at the position given by store key "index" (default 0).
  static FeatureRegistry with_list_ops();

 private:
  std::map<FeatureId, Handler> bindings_;
};

// Information-transition function: reads the retiring instance's store and
// fills the successor's fresh store. May throw RuntimeError (code
// "transition-failed").
using Transition = std::function<void(const Store&, Store&)>;

class TransitionRegistry {
 public:
  void bind(Identifier name, Transition transition);
  const Transition* find(const Identifier& name) const;

  // Built-ins: `StQueueToDyQueueTrans` drains the source's "items" queue
  // front-to-back into the target, preserving order; `CopyAll` copies every
  // store key.
  static TransitionRegistry with_builtins();

 private:
  std::map<Identifier, Transition> bindings_;
};

// Scripted outputs for stubbed features: each invocation consumes the next
// value; the last value repeats once the list is exhausted.
struct StubScript {
  std::map<FeatureId, std::vector<Value>> outputs;
};

// Parses stub script text: one `<feature> -> <literal>[, <literal>...]`
// rule per line, `#` comments, integers or double-quoted strings.
std::variant<StubScript, std::vector<Diagnostic>> parse_stub_script(
    const std::string& path, const std::string& text);

}  // namespace gaf::runtime

#endif  // GAF_REGISTRIES_HPP_
