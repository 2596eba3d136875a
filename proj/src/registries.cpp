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

#include "gaf/registries.hpp"

#include <cctype>
#include <cstdint>
#include <sstream>
#include <utility>

namespace gaf::runtime {
namespace {

// --- list-operation helpers -------------------------------------------------

Value::Sequence& items_of(Store& store, const char* op) {
  auto it = store.find("items");
  if (it == store.end()) {
    it = store.emplace("items", Value(Value::Sequence{})).first;
  }
  if (it->second.kind() != Value::Kind::kSequence) {
    throw RuntimeError{"handler-error",
                       std::string(op) + ": store key 'items' is not a sequence"};
  }
  return it->second.as_sequence();
}

Value require_input(const std::optional<Value>& input, const char* op) {
  if (!input.has_value()) {
    throw RuntimeError{"handler-error",
                       std::string(op) + " requires an input value"};
  }
  return *input;
}

std::int64_t require_int(const Value& v, const char* op, const char* what) {
  if (v.kind() != Value::Kind::kInt) {
    throw RuntimeError{"handler-error",
                       std::string(op) + ": " + what + " must be an integer"};
  }
  return v.as_int();
}

Value put_at_end(Store& store, const std::optional<Value>& input) {
  Value v = require_input(input, "PutAtEnd");
  items_of(store, "PutAtEnd").push_back(v);
  return v;
}

Value put_at_beg(Store& store, const std::optional<Value>& input) {
  Value v = require_input(input, "PutAtBeg");
  auto& items = items_of(store, "PutAtBeg");
  items.insert(items.begin(), v);
  return v;
}

Value get_from_beg(Store& store, const std::optional<Value>&) {
  auto& items = items_of(store, "GetFromBeg");
  if (items.empty()) {
    throw RuntimeError{"handler-error", "GetFromBeg: no items to take"};
  }
  Value v = items.front();
  items.erase(items.begin());
  return v;
}

Value get_from_end(Store& store, const std::optional<Value>&) {
  auto& items = items_of(store, "GetFromEnd");
  if (items.empty()) {
    throw RuntimeError{"handler-error", "GetFromEnd: no items to take"};
  }
  Value v = items.back();
  items.pop_back();
  return v;
}

Value is_empty(Store& store, const std::optional<Value>&) {
  auto it = store.find("items");
  if (it == store.end()) return Value(std::int64_t{1});
  if (it->second.kind() != Value::Kind::kSequence) {
    throw RuntimeError{"handler-error",
                       "Empty: store key 'items' is not a sequence"};
  }
  return Value(std::int64_t{it->second.as_sequence().empty() ? 1 : 0});
}

Value get_at(Store& store, const std::optional<Value>& input) {
  std::int64_t index =
      require_int(require_input(input, "GetAt"), "GetAt", "the index");
  auto& items = items_of(store, "GetAt");
  if (index < 0 || static_cast<std::size_t>(index) >= items.size()) {
    std::ostringstream msg;
    msg << "GetAt: index " << index << " out of range for " << items.size()
        << " item(s)";
    throw RuntimeError{"handler-error", msg.str()};
  }
  return items[static_cast<std::size_t>(index)];
}

Value insert_at(Store& store, const std::optional<Value>& input) {
  Value v = require_input(input, "InsertAt");
  std::int64_t index = 0;
  auto it = store.find("index");
  if (it != store.end()) {
    index = require_int(it->second, "InsertAt", "store key 'index'");
  }
  auto& items = items_of(store, "InsertAt");
  if (index < 0 || static_cast<std::size_t>(index) > items.size()) {
    std::ostringstream msg;
    msg << "InsertAt: index " << index << " out of range for " << items.size()
        << " item(s)";
    throw RuntimeError{"handler-error", msg.str()};
  }
  items.insert(items.begin() + static_cast<std::ptrdiff_t>(index), v);
  return v;
}

// --- transitions -------------------------------------------------------------

// Drains the source queue front-to-back into the target: the loop
// "while not Empty: PutAtEnd(GetFromBeg())" expressed over the two stores.
void queue_drain_transition(const Store& source, Store& target) {
  auto it = source.find("items");
  if (it == source.end()) return;
  if (it->second.kind() != Value::Kind::kSequence) {
    throw RuntimeError{"transition-failed",
                       "source store key 'items' is not a sequence"};
  }
  Value::Sequence drained;
  for (const Value& v : it->second.as_sequence()) drained.push_back(v);
  target["items"] = Value(std::move(drained));
}

void copy_all_transition(const Store& source, Store& target) {
  for (const auto& [key, value] : source) target[key] = value;
}

}  // namespace

void FeatureRegistry::bind(FeatureId feature, Handler handler) {
  bindings_[std::move(feature)] = std::move(handler);
}

const Handler* FeatureRegistry::find(const FeatureId& feature) const {
  auto it = bindings_.find(feature);
  return it == bindings_.end() ? nullptr : &it->second;
}

FeatureRegistry FeatureRegistry::with_list_ops() {
  FeatureRegistry reg;
  reg.bind("PutAtEnd", put_at_end);
  reg.bind("PutAtBeg", put_at_beg);
  reg.bind("GetFromBeg", get_from_beg);
  reg.bind("GetFromEnd", get_from_end);
  reg.bind("Empty", is_empty);
  reg.bind("InsertAt", insert_at);
  reg.bind("GetAt", get_at);
  return reg;
}

void TransitionRegistry::bind(Identifier name, Transition transition) {
  bindings_[std::move(name)] = std::move(transition);
}

const Transition* TransitionRegistry::find(const Identifier& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

TransitionRegistry TransitionRegistry::with_builtins() {
  TransitionRegistry reg;
  reg.bind("StQueueToDyQueueTrans", queue_drain_transition);
  reg.bind("CopyAll", copy_all_transition);
  return reg;
}

// --- stub script -------------------------------------------------------------

namespace {

void strip_comment(std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) {
      line.erase(i);
      return;
    }
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Parses one literal: integer (optional leading '-') or quoted string.
std::optional<Value> parse_literal(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"') return std::nullopt;
    return Value(text.substr(1, text.size() - 2));
  }
  std::size_t start = text.front() == '-' ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  try {
    return Value(static_cast<std::int64_t>(std::stoll(text)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Splits on commas that sit outside string quotes.
std::vector<std::string> split_literals(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  bool in_string = false;
  for (char c : text) {
    if (c == '"') in_string = !in_string;
    if (c == ',' && !in_string) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

std::variant<StubScript, std::vector<Diagnostic>> parse_stub_script(
    const std::string& path, const std::string& text) {
  StubScript script;
  std::vector<Diagnostic> diags;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    SourceLoc loc{path, line_no, 1};
    strip_comment(raw);
    std::string line = trim(raw);
    if (line.empty()) continue;
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) {
      diags.push_back(make_error("stub-syntax-error",
                                 "expected '<feature> -> <literal>, ...'",
                                 loc));
      continue;
    }
    std::string feature = trim(line.substr(0, arrow));
    if (!is_valid_identifier(feature)) {
      diags.push_back(make_error(
          "stub-syntax-error", "'" + feature + "' is not a feature name", loc));
      continue;
    }
    std::vector<Value> values;
    bool ok = true;
    for (const std::string& part : split_literals(line.substr(arrow + 2))) {
      std::optional<Value> v = parse_literal(trim(part));
      if (!v.has_value()) {
        diags.push_back(make_error("stub-syntax-error",
                                   "bad literal '" + trim(part) + "'", loc));
        ok = false;
        break;
      }
      values.push_back(std::move(*v));
    }
    if (!ok) continue;
    if (values.empty()) {
      diags.push_back(
          make_error("stub-syntax-error", "rule lists no values", loc));
      continue;
    }
    if (script.outputs.count(feature) > 0) {
      diags.push_back(make_error("stub-syntax-error",
                                 "duplicate rule for feature '" + feature + "'",
                                 loc));
      continue;
    }
    script.outputs.emplace(std::move(feature), std::move(values));
  }
  if (has_errors(diags)) return diags;
  return script;
}

}  // namespace gaf::runtime
