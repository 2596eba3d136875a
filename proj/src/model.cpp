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

#include "gaf/model.hpp"

#include <algorithm>
#include <sstream>

namespace gaf {

std::string format_diagnostic(const Diagnostic& diag) {
  std::ostringstream out;
  out << diag.location.file << ":" << diag.location.line << ":"
      << diag.location.column << ": "
      << (diag.severity == Severity::kError ? "error" : "warning") << "["
      << diag.code << "]: " << diag.message;
  return out.str();
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::kError;
  });
}

bool is_valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto is_letter = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!is_letter(name[0])) return false;
  for (char c : name) {
    if (!is_letter(c) && !is_digit(c) && c != '_') return false;
  }
  return true;
}

const char* to_string(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::kState:
      return "state";
    case FeatureKind::kData:
      return "data";
    case FeatureKind::kMethod:
      return "method";
    case FeatureKind::kAdapter:
      return "adapter";
  }
  return "?";
}

const char* to_string(ActionMode mode) {
  return mode == ActionMode::kEnable ? "Enable" : "Disable";
}

const char* to_string(RelationVerb verb) {
  return verb == RelationVerb::kImplies ? "Implies" : "Excludes";
}

const char* to_string(CompareOp op) {
  switch (op) {
    case CompareOp::kEq:
      return "==";
    case CompareOp::kNe:
      return "!=";
    case CompareOp::kLt:
      return "<";
    case CompareOp::kLe:
      return "<=";
    case CompareOp::kGt:
      return ">";
    case CompareOp::kGe:
      return ">=";
  }
  return "?";
}

std::string to_source(const Relation& relation) {
  std::ostringstream out;
  out << to_string(relation.trigger_mode) << " (" << relation.trigger << ") "
      << to_string(relation.verb) << " " << to_string(relation.target_mode)
      << " (" << relation.target << ")";
  return out.str();
}

const FeatureDecl* SoftwareDatabase::find_feature(const FeatureId& id) const {
  for (const FeatureDecl& f : features) {
    if (f.id == id) return &f;
  }
  return nullptr;
}

const GAProcClause* GAProc::find_clause(const EventId& event) const {
  for (const GAProcClause& clause : clauses) {
    if (clause.event == event) return &clause;
  }
  return nullptr;
}

bool operator==(const Condition& a, const Condition& b) {
  if (a.node.index() != b.node.index()) return false;
  struct Visitor {
    const Condition& other;
    bool operator()(const CondCompare& x) const {
      const auto& y = std::get<CondCompare>(other.node);
      return x.op == y.op && x.rhs == y.rhs;
    }
    bool operator()(const CondNot& x) const {
      const auto& y = std::get<CondNot>(other.node);
      return *x.operand == *y.operand;
    }
    bool operator()(const CondAnd& x) const {
      const auto& y = std::get<CondAnd>(other.node);
      return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
    }
    bool operator()(const CondOr& x) const {
      const auto& y = std::get<CondOr>(other.node);
      return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
    }
  };
  return std::visit(Visitor{b}, a.node);
}

bool SoftwareConfiguration::has_feature(const FeatureId& id) const {
  return std::find(features.begin(), features.end(), id) != features.end();
}

bool SoftwareConfiguration::expects_event(const EventId& id) const {
  return std::find(expected_events.begin(), expected_events.end(), id) !=
         expected_events.end();
}

const GAProg* SoftwareConfiguration::find_gaprog(const Identifier& id) const {
  for (const GAProg& p : gaprogs) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const Behavior* SoftwareConfiguration::find_behavior(
    const Identifier& id) const {
  for (const Behavior& b : behaviors) {
    if (b.id == id) return &b;
  }
  return nullptr;
}

const GAProc* SoftwareConfiguration::find_gaproc(const Identifier& id) const {
  for (const GAProc& p : gaprocs) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const MetamorphosisProgram* SoftwareConfiguration::find_metamorphosis(
    const Identifier& id) const {
  for (const MetamorphosisProgram& m : metamorphoses) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

bool SoftwareInstance::is_enabled(const FeatureId& feature) const {
  auto it = feature_state.find(feature);
  return it != feature_state.end() && it->second;
}

}  // namespace gaf
