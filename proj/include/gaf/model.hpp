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

#ifndef GAF_MODEL_HPP_
#define GAF_MODEL_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaf/diagnostics.hpp"
#include "gaf/value.hpp"

namespace gaf {

// Identifiers name features, events, programs, behaviors, processes and
// units. All share one lexical rule: a letter followed by letters, digits
// or underscores. Uniqueness scopes differ per declaration site and are
// enforced by validate_model.
using Identifier = std::string;
using FeatureId = Identifier;
using EventId = Identifier;

/// The reserved event that names a lifecycle's instance-creation clause.
inline constexpr const char* kCreationEvent = "creation";

bool is_valid_identifier(const std::string& name);

// ---------------------------------------------------------------------------
// Database

enum class FeatureKind { kState, kData, kMethod, kAdapter };

const char* to_string(FeatureKind kind);

struct FeatureDecl {
  FeatureId id;
  FeatureKind kind = FeatureKind::kState;
  SourceLoc loc;

  friend bool operator==(const FeatureDecl& a, const FeatureDecl& b) {
    return a.id == b.id && a.kind == b.kind;
  }
};

/// The universe of features for one business domain. Declaration order is
/// preserved; it fixes deterministic processing order everywhere downstream.
struct SoftwareDatabase {
  Identifier name;
  std::vector<FeatureDecl> features;
  SourceLoc loc;

  const FeatureDecl* find_feature(const FeatureId& id) const;

  friend bool operator==(const SoftwareDatabase& a, const SoftwareDatabase& b) {
    return a.name == b.name && a.features == b.features;
  }
};

// ---------------------------------------------------------------------------
// Relations

enum class ActionMode { kEnable, kDisable };
enum class RelationVerb { kImplies, kExcludes };

const char* to_string(ActionMode mode);
const char* to_string(RelationVerb verb);

/// One directional, action-triggered dependency rule. Only same-mode forms
/// exist; mixed-mode relations are rejected at link time.
struct Relation {
  ActionMode trigger_mode = ActionMode::kEnable;
  FeatureId trigger;
  RelationVerb verb = RelationVerb::kImplies;
  ActionMode target_mode = ActionMode::kEnable;
  FeatureId target;
  SourceLoc loc;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.trigger_mode == b.trigger_mode && a.trigger == b.trigger &&
           a.verb == b.verb && a.target_mode == b.target_mode &&
           a.target == b.target;
  }
};

/// Renders a relation in canonical source form, without the trailing
/// semicolon: `Enable (a) Implies Enable (b)`.
std::string to_source(const Relation& relation);

struct RelationSet {
  std::vector<Relation> relations;

  friend bool operator==(const RelationSet& a, const RelationSet& b) {
    return a.relations == b.relations;
  }
};

// ---------------------------------------------------------------------------
// Adaptation programs and processes

/// A named delta of Enable/Disable clauses defining one adaptation state.
struct GAProg {
  Identifier id;
  std::vector<std::vector<FeatureId>> enable_clauses;
  std::vector<std::vector<FeatureId>> disable_clauses;
  SourceLoc loc;

  friend bool operator==(const GAProg& a, const GAProg& b) {
    return a.id == b.id && a.enable_clauses == b.enable_clauses &&
           a.disable_clauses == b.disable_clauses;
  }
};

/// One lifecycle step: on `event`, run the named adaptation state or
/// metamorphosis program, optionally switching to the named behavior.
struct GAProcClause {
  EventId event;
  Identifier target;
  std::optional<Identifier> behavior;
  SourceLoc loc;

  friend bool operator==(const GAProcClause& a, const GAProcClause& b) {
    return a.event == b.event && a.target == b.target &&
           a.behavior == b.behavior;
  }
};

/// The lifecycle of a software instance: an event -> clause list with
/// exactly one `creation` clause.
struct GAProc {
  Identifier id;
  std::vector<GAProcClause> clauses;
  SourceLoc loc;

  const GAProcClause* find_clause(const EventId& event) const;

  friend bool operator==(const GAProc& a, const GAProc& b) {
    return a.id == b.id && a.clauses == b.clauses;
  }
};

// ---------------------------------------------------------------------------
// Behaviors

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

const char* to_string(CompareOp op);

/// An integer or quoted-string literal as written in a guard.
struct ConditionLiteral {
  std::variant<std::int64_t, std::string> value;

  friend bool operator==(const ConditionLiteral&,
                         const ConditionLiteral&) = default;
};

struct Condition;

/// `out <relop> literal` — a comparison against the last executed
/// feature's output.
struct CondCompare {
  CompareOp op = CompareOp::kEq;
  ConditionLiteral rhs;
};

struct CondNot {
  std::shared_ptr<Condition> operand;
};

struct CondAnd {
  std::shared_ptr<Condition> lhs;
  std::shared_ptr<Condition> rhs;
};

struct CondOr {
  std::shared_ptr<Condition> lhs;
  std::shared_ptr<Condition> rhs;
};

/// Guard expression tree. Nodes are shared immutable values; equality is
/// structural (deep).
struct Condition {
  std::variant<CondCompare, CondNot, CondAnd, CondOr> node;
};

bool operator==(const Condition& a, const Condition& b);
inline bool operator!=(const Condition& a, const Condition& b) {
  return !(a == b);
}

/// `from - (guard)* to;` — execute `to` after `from` when all guards hold.
struct BehaviorEdge {
  FeatureId from;
  std::vector<Condition> guards;
  FeatureId to;
  SourceLoc loc;

  friend bool operator==(const BehaviorEdge& a, const BehaviorEdge& b) {
    return a.from == b.from && a.guards == b.guards && a.to == b.to;
  }
};

/// A guarded graph over enabled features. The start feature is the `from`
/// of the first edge.
struct Behavior {
  Identifier id;
  std::vector<BehaviorEdge> edges;
  SourceLoc loc;

  const FeatureId& start() const { return edges.front().from; }

  friend bool operator==(const Behavior& a, const Behavior& b) {
    return a.id == b.id && a.edges == b.edges;
  }
};

// ---------------------------------------------------------------------------
// Metamorphosis

enum class TransitionKind { kFunction, kProcedure };

/// Adaptation across configurations: old features destroyed, target state
/// applied, persistent information carried over by a named transition
/// function.
struct MetamorphosisProgram {
  Identifier id;
  Identifier target_configuration;
  Identifier from_state;  // GAProg id in the owning configuration
  Identifier to_state;    // GAProg id in the target configuration
  TransitionKind transition_kind = TransitionKind::kFunction;
  Identifier transition_fn;
  SourceLoc loc;

  friend bool operator==(const MetamorphosisProgram& a,
                         const MetamorphosisProgram& b) {
    return a.id == b.id && a.target_configuration == b.target_configuration &&
           a.from_state == b.from_state && a.to_state == b.to_state &&
           a.transition_kind == b.transition_kind &&
           a.transition_fn == b.transition_fn;
  }
};

// ---------------------------------------------------------------------------
// Configuration

/// A selected feature subset of one database plus all of its adaptation
/// machinery. Section contents keep declaration order.
struct SoftwareConfiguration {
  Identifier name;
  Identifier database;
  std::vector<FeatureId> features;
  std::vector<EventId> expected_events;
  RelationSet relations;
  std::vector<GAProg> gaprogs;
  std::vector<Behavior> behaviors;
  std::vector<GAProc> gaprocs;
  std::vector<MetamorphosisProgram> metamorphoses;
  SourceLoc loc;

  bool has_feature(const FeatureId& id) const;
  bool expects_event(const EventId& id) const;
  const GAProg* find_gaprog(const Identifier& id) const;
  const Behavior* find_behavior(const Identifier& id) const;
  const GAProc* find_gaproc(const Identifier& id) const;
  const MetamorphosisProgram* find_metamorphosis(const Identifier& id) const;

  friend bool operator==(const SoftwareConfiguration& a,
                         const SoftwareConfiguration& b) {
    return a.name == b.name && a.database == b.database &&
           a.features == b.features && a.expected_events == b.expected_events &&
           a.relations == b.relations && a.gaprogs == b.gaprogs &&
           a.behaviors == b.behaviors && a.gaprocs == b.gaprocs &&
           a.metamorphoses == b.metamorphoses;
  }
};

// ---------------------------------------------------------------------------
// Instance

/// Enabled/disabled status of every feature of one configuration. Total by
/// construction: exactly one entry per configuration feature.
using FeatureState = std::map<FeatureId, bool>;

/// A running entity. Identity and lifecycle survive metamorphosis; the
/// feature state and store are rebuilt against the target configuration.
struct SoftwareInstance {
  Identifier id;
  Identifier configuration;
  Identifier lifecycle;        // GAProc id
  Identifier lifecycle_owner;  // configuration that declared the GAProc
  FeatureState feature_state;
  std::optional<Identifier> current_state;    // GAProg id
  std::optional<Identifier> active_behavior;  // Behavior id
  Store store;

  bool is_enabled(const FeatureId& feature) const;

  friend bool operator==(const SoftwareInstance& a,
                         const SoftwareInstance& b) = default;
};

// ---------------------------------------------------------------------------
// Operations

/// Checks every structural invariant of the loaded units: name uniqueness,
/// membership of features in their database and configuration, relation
/// well-formedness, seed conflicts, lifecycle clause rules, and
/// cross-configuration resolution of lifecycle targets and metamorphosis
/// states. Returns one diagnostic per violation, in declaration order.
/// Pure: identical input yields an identical diagnostic list.
std::vector<Diagnostic> validate_model(
    const std::vector<SoftwareDatabase>& databases,
    const std::vector<SoftwareConfiguration>& configurations);

}  // namespace gaf

#endif  // GAF_MODEL_HPP_
