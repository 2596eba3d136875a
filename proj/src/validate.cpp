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

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gaf/model.hpp"

namespace gaf {
namespace {

class Validator {
 public:
  Validator(const std::vector<SoftwareDatabase>& databases,
            const std::vector<SoftwareConfiguration>& configurations)
      : databases_(databases), configurations_(configurations) {}

  std::vector<Diagnostic> run() {
    for (const SoftwareDatabase& db : databases_) check_database(db);
    for (const SoftwareConfiguration& cfg : configurations_)
      check_configuration(cfg);
    return std::move(diags_);
  }

 private:
  void error(std::string code, std::string message, const SourceLoc& loc) {
    diags_.push_back(make_error(std::move(code), std::move(message), loc));
  }

  const SoftwareDatabase* find_database(const Identifier& name) const {
    for (const SoftwareDatabase& db : databases_) {
      if (db.name == name) return &db;
    }
    return nullptr;
  }

  const SoftwareConfiguration* find_configuration(
      const Identifier& name) const {
    for (const SoftwareConfiguration& cfg : configurations_) {
      if (cfg.name == name) return &cfg;
    }
    return nullptr;
  }

  void check_database(const SoftwareDatabase& db) {
    if (!is_valid_identifier(db.name)) {
      error("invalid-identifier", "'" + db.name + "' is not a valid name",
            db.loc);
    }
    if (seen_databases_.count(db.name) > 0) {
      error("duplicate-definition", "database '" + db.name + "' redefined",
            db.loc);
    }
    seen_databases_.insert(db.name);

    std::set<FeatureId> seen;
    for (const FeatureDecl& f : db.features) {
      if (!is_valid_identifier(f.id)) {
        error("invalid-identifier", "'" + f.id + "' is not a valid name",
              f.loc);
      }
      if (!seen.insert(f.id).second) {
        error("duplicate-feature",
              "duplicate feature '" + f.id + "' in database '" + db.name + "'",
              f.loc);
      }
    }
  }

  void check_configuration(const SoftwareConfiguration& cfg) {
    if (!is_valid_identifier(cfg.name)) {
      error("invalid-identifier", "'" + cfg.name + "' is not a valid name",
            cfg.loc);
    }
    if (seen_configurations_.count(cfg.name) > 0) {
      error("duplicate-definition",
            "configuration '" + cfg.name + "' redefined", cfg.loc);
    }
    seen_configurations_.insert(cfg.name);

    const SoftwareDatabase* db = find_database(cfg.database);
    if (db == nullptr) {
      error("unknown-database",
            "configuration '" + cfg.name + "' references unknown database '" +
                cfg.database + "'",
            cfg.loc);
    }

    std::set<FeatureId> subset;
    for (const FeatureId& f : cfg.features) {
      if (db != nullptr && db->find_feature(f) == nullptr) {
        error("unknown-feature",
              "feature '" + f + "' is not declared in database '" +
                  cfg.database + "'",
              cfg.loc);
      }
      if (!subset.insert(f).second) {
        error("duplicate-feature",
              "feature '" + f + "' listed twice in configuration '" +
                  cfg.name + "'",
              cfg.loc);
      }
    }

    std::set<EventId> events;
    for (const EventId& e : cfg.expected_events) {
      if (!events.insert(e).second) {
        error("duplicate-event",
              "event '" + e + "' listed twice in configuration '" + cfg.name +
                  "'",
              cfg.loc);
      }
    }

    check_relations(cfg, subset);
    check_program_namespace(cfg);
    for (const GAProg& prog : cfg.gaprogs) check_gaprog(cfg, prog, subset);
    for (const Behavior& beh : cfg.behaviors) check_behavior(cfg, beh, subset);
    for (const GAProc& proc : cfg.gaprocs) check_gaproc(cfg, proc);
    for (const MetamorphosisProgram& meta : cfg.metamorphoses)
      check_metamorphosis(cfg, meta);
  }

  void check_relations(const SoftwareConfiguration& cfg,
                       const std::set<FeatureId>& subset) {
    std::vector<const Relation*> seen;
    for (const Relation& rel : cfg.relations.relations) {
      for (const FeatureId* f : {&rel.trigger, &rel.target}) {
        if (subset.count(*f) == 0) {
          error("unknown-feature",
                "relation references feature '" + *f +
                    "' outside configuration '" + cfg.name + "'",
                rel.loc);
        }
      }
      if (rel.trigger_mode != rel.target_mode) {
        error("mixed-mode-relation",
              "relation mixes Enable and Disable modes: " + to_source(rel),
              rel.loc);
      }
      if (rel.trigger == rel.target) {
        error("self-relation",
              "relation trigger and target are both '" + rel.trigger + "'",
              rel.loc);
      }
      bool duplicate =
          std::any_of(seen.begin(), seen.end(),
                      [&rel](const Relation* r) { return *r == rel; });
      if (duplicate) {
        error("duplicate-relation", "duplicate relation: " + to_source(rel),
              rel.loc);
      }
      seen.push_back(&rel);
    }
  }

  // GAProgs, behaviors, GAProcs and metamorphosis programs share one name
  // space within a configuration; lifecycle clause targets could not be
  // classified otherwise.
  void check_program_namespace(const SoftwareConfiguration& cfg) {
    std::set<Identifier> names;
    auto declare = [&](const Identifier& id, const char* what,
                       const SourceLoc& loc) {
      if (!is_valid_identifier(id)) {
        error("invalid-identifier", "'" + id + "' is not a valid name", loc);
      }
      if (!names.insert(id).second) {
        error("duplicate-definition",
              std::string(what) + " '" + id + "' collides with another " +
                  "definition in configuration '" + cfg.name + "'",
              loc);
      }
    };
    for (const GAProg& p : cfg.gaprogs) declare(p.id, "GAProg", p.loc);
    for (const Behavior& b : cfg.behaviors) declare(b.id, "Behavior", b.loc);
    for (const GAProc& p : cfg.gaprocs) declare(p.id, "GAProc", p.loc);
    for (const MetamorphosisProgram& m : cfg.metamorphoses)
      declare(m.id, "Metamorphosis_Program", m.loc);
  }

  void check_gaprog(const SoftwareConfiguration& cfg, const GAProg& prog,
                    const std::set<FeatureId>& subset) {
    std::set<FeatureId> enabled;
    std::set<FeatureId> disabled;
    auto check_clauses =
        [&](const std::vector<std::vector<FeatureId>>& clauses,
            std::set<FeatureId>& into) {
          for (const std::vector<FeatureId>& clause : clauses) {
            if (clause.empty()) {
              error("empty-clause",
                    "clause in GAProg '" + prog.id + "' lists no features",
                    prog.loc);
            }
            for (const FeatureId& f : clause) {
              if (subset.count(f) == 0) {
                error("unknown-feature",
                      "GAProg '" + prog.id + "' references feature '" + f +
                          "' outside configuration '" + cfg.name + "'",
                      prog.loc);
              }
              into.insert(f);
            }
          }
        };
    check_clauses(prog.enable_clauses, enabled);
    check_clauses(prog.disable_clauses, disabled);
    for (const FeatureId& f : enabled) {
      if (disabled.count(f) > 0) {
        error("seed-conflict",
              "seed conflict: feature '" + f +
                  "' appears in both an Enable and a Disable clause of "
                  "GAProg '" +
                  prog.id + "'",
              prog.loc);
      }
    }
  }

  void check_behavior(const SoftwareConfiguration& cfg, const Behavior& beh,
                      const std::set<FeatureId>& subset) {
    if (beh.edges.empty()) {
      error("empty-behavior", "behavior '" + beh.id + "' has no edges",
            beh.loc);
      return;
    }
    for (const BehaviorEdge& edge : beh.edges) {
      for (const FeatureId* f : {&edge.from, &edge.to}) {
        if (subset.count(*f) == 0) {
          error("unknown-feature",
                "behavior '" + beh.id + "' references feature '" + *f +
                    "' outside configuration '" + cfg.name + "'",
                edge.loc);
        }
      }
    }
  }

  // Lifecycle targets resolve against the owning configuration first; a
  // lifecycle outlives metamorphosis, so names missing there may resolve in
  // any other loaded configuration.
  enum class TargetKind { kNone, kState, kMetamorphosis, kAmbiguous };

  TargetKind resolve_target(const SoftwareConfiguration& owner,
                            const Identifier& name) const {
    if (owner.find_gaprog(name) != nullptr) return TargetKind::kState;
    if (owner.find_metamorphosis(name) != nullptr)
      return TargetKind::kMetamorphosis;
    bool state = false;
    bool meta = false;
    for (const SoftwareConfiguration& cfg : configurations_) {
      if (cfg.find_gaprog(name) != nullptr) state = true;
      if (cfg.find_metamorphosis(name) != nullptr) meta = true;
    }
    if (state && meta) return TargetKind::kAmbiguous;
    if (state) return TargetKind::kState;
    if (meta) return TargetKind::kMetamorphosis;
    return TargetKind::kNone;
  }

  bool behavior_known_anywhere(const Identifier& name) const {
    for (const SoftwareConfiguration& cfg : configurations_) {
      if (cfg.find_behavior(name) != nullptr) return true;
    }
    return false;
  }

  void check_gaproc(const SoftwareConfiguration& cfg, const GAProc& proc) {
    if (proc.clauses.empty()) {
      error("empty-gaproc", "GAProc '" + proc.id + "' has no clauses",
            proc.loc);
      return;
    }
    int creation_clauses = 0;
    std::set<EventId> events;
    for (const GAProcClause& clause : proc.clauses) {
      if (!events.insert(clause.event).second) {
        error("duplicate-event-clause",
              "GAProc '" + proc.id + "' has two clauses for event '" +
                  clause.event + "'",
              clause.loc);
      }
      if (clause.event == kCreationEvent) {
        ++creation_clauses;
        check_creation_clause(cfg, proc, clause);
      } else {
        check_lifecycle_clause(cfg, proc, clause);
      }
    }
    if (creation_clauses == 0) {
      error("missing-creation-clause",
            "GAProc '" + proc.id + "' has no (event = creation) clause",
            proc.loc);
    }
  }

  // The creation clause runs while the instance is still in the owning
  // configuration, so both its state and behavior must resolve there.
  void check_creation_clause(const SoftwareConfiguration& cfg,
                             const GAProc& proc, const GAProcClause& clause) {
    if (cfg.find_gaprog(clause.target) == nullptr) {
      error("unresolved-target",
            "creation clause of GAProc '" + proc.id +
                "' does not name a GAProg of configuration '" + cfg.name + "'",
            clause.loc);
    }
    if (clause.behavior.has_value() &&
        cfg.find_behavior(*clause.behavior) == nullptr) {
      error("unresolved-behavior",
            "creation clause of GAProc '" + proc.id +
                "' names unknown behavior '" + *clause.behavior + "'",
            clause.loc);
    }
  }

  void check_lifecycle_clause(const SoftwareConfiguration& cfg,
                              const GAProc& proc, const GAProcClause& clause) {
    TargetKind kind = resolve_target(cfg, clause.target);
    switch (kind) {
      case TargetKind::kNone:
        error("unresolved-target",
              "GAProc '" + proc.id + "' clause for event '" + clause.event +
                  "' targets unknown id '" + clause.target + "'",
              clause.loc);
        return;
      case TargetKind::kAmbiguous:
        error("ambiguous-target",
              "id '" + clause.target +
                  "' names both a GAProg and a Metamorphosis_Program in the "
                  "loaded configurations",
              clause.loc);
        return;
      case TargetKind::kState:
        if (clause.behavior.has_value() &&
            cfg.find_behavior(*clause.behavior) == nullptr &&
            !behavior_known_anywhere(*clause.behavior)) {
          error("unresolved-behavior",
                "GAProc '" + proc.id + "' clause for event '" + clause.event +
                    "' names unknown behavior '" + *clause.behavior + "'",
                clause.loc);
        }
        return;
      case TargetKind::kMetamorphosis: {
        if (!clause.behavior.has_value()) return;
        // A metamorphosis clause's behavior takes effect in the program's
        // target configuration; resolve it there.
        const MetamorphosisProgram* program =
            cfg.find_metamorphosis(clause.target);
        if (program == nullptr) {
          for (const SoftwareConfiguration& c : configurations_) {
            program = c.find_metamorphosis(clause.target);
            if (program != nullptr) break;
          }
        }
        const SoftwareConfiguration* target =
            program != nullptr ? find_configuration(program->target_configuration)
                               : nullptr;
        if (target != nullptr &&
            target->find_behavior(*clause.behavior) == nullptr) {
          error("unresolved-behavior",
                "behavior '" + *clause.behavior +
                    "' is not defined by target configuration '" +
                    target->name + "'",
                clause.loc);
        }
        return;
      }
    }
  }

  void check_metamorphosis(const SoftwareConfiguration& cfg,
                           const MetamorphosisProgram& meta) {
    if (meta.target_configuration == cfg.name) {
      error("self-metamorphosis",
            "Metamorphosis_Program '" + meta.id +
                "' targets its own configuration",
            meta.loc);
      return;
    }
    if (cfg.find_gaprog(meta.from_state) == nullptr) {
      error("unknown-state",
            "Metamorphosis_Program '" + meta.id + "' leaves from state '" +
                meta.from_state + "' which is not a GAProg of '" + cfg.name +
                "'",
            meta.loc);
    }
    const SoftwareConfiguration* target =
        find_configuration(meta.target_configuration);
    if (target == nullptr) {
      error("missing-configuration",
            "Metamorphosis_Program '" + meta.id +
                "' targets configuration '" + meta.target_configuration +
                "' which is not loaded",
            meta.loc);
      return;
    }
    if (target->find_gaprog(meta.to_state) == nullptr) {
      error("unknown-state",
            "Metamorphosis_Program '" + meta.id + "' arrives at state '" +
                meta.to_state + "' which is not a GAProg of '" + target->name +
                "'",
            meta.loc);
    }
  }

  const std::vector<SoftwareDatabase>& databases_;
  const std::vector<SoftwareConfiguration>& configurations_;
  std::set<Identifier> seen_databases_;
  std::set<Identifier> seen_configurations_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::vector<Diagnostic> validate_model(
    const std::vector<SoftwareDatabase>& databases,
    const std::vector<SoftwareConfiguration>& configurations) {
  return Validator(databases, configurations).run();
}

}  // namespace gaf
