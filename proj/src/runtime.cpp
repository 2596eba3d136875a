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

#include "gaf/runtime.hpp"

#include <cassert>
#include <set>
#include <sstream>
#include <utility>

namespace gaf::runtime {
namespace {

// Internal signal for an incoherent adaptation; carries the structured
// error so callers can inspect the derivation chains.
struct CoherenceFailure {
  coherence::CoherenceError error;
};

bool literal_equals(const Value& out, const ConditionLiteral& lit) {
  if (const auto* i = std::get_if<std::int64_t>(&lit.value)) {
    return out.kind() == Value::Kind::kInt && out.as_int() == *i;
  }
  const auto& s = std::get<std::string>(lit.value);
  return out.kind() == Value::Kind::kString && out.as_string() == s;
}

std::int64_t ordering_operand(const Value& out, const ConditionLiteral& lit,
                              std::int64_t& rhs) {
  const auto* i = std::get_if<std::int64_t>(&lit.value);
  if (out.kind() != Value::Kind::kInt || i == nullptr) {
    throw RuntimeError{
        "guard-type-error",
        "ordering comparison requires integer output and integer literal"};
  }
  rhs = *i;
  return out.as_int();
}

bool eval_condition(const Condition& cond, const Value& out) {
  if (const auto* cmp = std::get_if<CondCompare>(&cond.node)) {
    switch (cmp->op) {
      case CompareOp::kEq:
        return literal_equals(out, cmp->rhs);
      case CompareOp::kNe:
        return !literal_equals(out, cmp->rhs);
      case CompareOp::kLt: {
        std::int64_t rhs = 0;
        return ordering_operand(out, cmp->rhs, rhs) < rhs;
      }
      case CompareOp::kLe: {
        std::int64_t rhs = 0;
        return ordering_operand(out, cmp->rhs, rhs) <= rhs;
      }
      case CompareOp::kGt: {
        std::int64_t rhs = 0;
        return ordering_operand(out, cmp->rhs, rhs) > rhs;
      }
      case CompareOp::kGe: {
        std::int64_t rhs = 0;
        return ordering_operand(out, cmp->rhs, rhs) >= rhs;
      }
    }
    return false;
  }
  if (const auto* n = std::get_if<CondNot>(&cond.node)) {
    return !eval_condition(*n->operand, out);
  }
  if (const auto* a = std::get_if<CondAnd>(&cond.node)) {
    return eval_condition(*a->lhs, out) && eval_condition(*a->rhs, out);
  }
  const auto& o = std::get<CondOr>(cond.node);
  return eval_condition(*o.lhs, out) || eval_condition(*o.rhs, out);
}

bool guards_hold(const std::vector<Condition>& guards, const Value& out) {
  for (const Condition& guard : guards) {
    if (!eval_condition(guard, out)) return false;
  }
  return true;
}

}  // namespace

Engine::Engine(const LinkedModel& model, FeatureRegistry features,
               TransitionRegistry transitions, bool stub_mode,
               StubScript stubs)
    : model_(model),
      features_(std::move(features)),
      transitions_(std::move(transitions)),
      stub_mode_(stub_mode),
      stubs_(std::move(stubs)) {}

const SoftwareConfiguration& Engine::current_configuration(
    const SoftwareInstance& instance) const {
  const SoftwareConfiguration* cfg =
      model_.find_configuration(instance.configuration);
  if (cfg == nullptr) {
    throw RuntimeError{"unknown-configuration",
                       "configuration '" + instance.configuration +
                           "' is not loaded"};
  }
  return *cfg;
}

const GAProc& Engine::lifecycle_of(const SoftwareInstance& instance) const {
  const SoftwareConfiguration* owner =
      model_.find_configuration(instance.lifecycle_owner);
  if (owner == nullptr) {
    throw RuntimeError{"unknown-configuration",
                       "configuration '" + instance.lifecycle_owner +
                           "' is not loaded"};
  }
  const GAProc* proc = owner->find_gaproc(instance.lifecycle);
  if (proc == nullptr) {
    throw RuntimeError{"unknown-gaproc", "GAProc '" + instance.lifecycle +
                                             "' is not defined by "
                                             "configuration '" +
                                             owner->name + "'"};
  }
  return *proc;
}

coherence::Closure Engine::apply_or_throw(FeatureState& state,
                                          const GAProg& prog,
                                          const RelationSet& relations) {
  auto result = coherence::apply_gaprog(state, prog, relations);
  if (auto* err = std::get_if<coherence::CoherenceError>(&result)) {
    throw CoherenceFailure{std::move(*err)};
  }
  return std::move(std::get<coherence::Closure>(result));
}

void Engine::trace_state_records(const Identifier& gaprog,
                                 const std::optional<Identifier>& behavior,
                                 const coherence::Closure& closure) {
  trace_.append("STATE " + gaprog + " BEHAVIOR " +
                (behavior.has_value() ? *behavior : "-"));
  for (const auto& [mode, feature] : closure.sequence) {
    trace_.append(
        (mode == ActionMode::kEnable ? "ENABLE " : "DISABLE ") + feature);
  }
}

OpError Engine::trace_error(const RuntimeError& err,
                            std::optional<coherence::CoherenceError> cause) {
  trace_.append("ERROR " + err.code + " " + err.detail);
  return OpError{err.code, err.detail, std::move(cause)};
}

std::variant<SoftwareInstance, OpError> Engine::create_instance(
    const Identifier& instance_id, const Identifier& database,
    const Identifier& configuration, const Identifier& gaproc) {
  try {
    if (model_.find_database(database) == nullptr) {
      throw RuntimeError{"unknown-database",
                         "database '" + database + "' is not loaded"};
    }
    const SoftwareConfiguration* cfg =
        model_.find_configuration(configuration);
    if (cfg == nullptr) {
      throw RuntimeError{"unknown-configuration",
                         "configuration '" + configuration +
                             "' is not loaded"};
    }
    if (cfg->database != database) {
      throw RuntimeError{"configuration-database-mismatch",
                         "configuration '" + configuration +
                             "' is defined on database '" + cfg->database +
                             "', not '" + database + "'"};
    }
    const GAProc* proc = cfg->find_gaproc(gaproc);
    if (proc == nullptr) {
      throw RuntimeError{"unknown-gaproc", "GAProc '" + gaproc +
                                               "' is not defined by "
                                               "configuration '" +
                                               configuration + "'"};
    }

    trace_.append("CREATE " + instance_id + " CONFIG " + cfg->name +
                  " PROC " + proc->id);

    SoftwareInstance instance;
    instance.id = instance_id;
    instance.configuration = cfg->name;
    instance.lifecycle = proc->id;
    instance.lifecycle_owner = cfg->name;
    for (const FeatureId& f : cfg->features) instance.feature_state[f] = false;
    assert([&] {
      for (const auto& [f, on] : instance.feature_state)
        if (on) return false;
      return true;
    }());

    const GAProcClause* clause = proc->find_clause(kCreationEvent);
    if (clause == nullptr) {
      throw RuntimeError{"missing-creation-clause",
                         "GAProc '" + proc->id +
                             "' has no (event = creation) clause"};
    }
    const GAProg* prog = cfg->find_gaprog(clause->target);
    if (prog == nullptr) {
      throw RuntimeError{"unresolved-target",
                         "creation target '" + clause->target +
                             "' is not a GAProg of configuration '" +
                             cfg->name + "'"};
    }
    if (clause->behavior.has_value() &&
        cfg->find_behavior(*clause->behavior) == nullptr) {
      throw RuntimeError{"unresolved-behavior",
                         "behavior '" + *clause->behavior +
                             "' is not defined by configuration '" +
                             cfg->name + "'"};
    }

    coherence::Closure closure =
        apply_or_throw(instance.feature_state, *prog, cfg->relations);
    instance.current_state = prog->id;
    instance.active_behavior = clause->behavior;
    trace_state_records(prog->id, clause->behavior, closure);
    return instance;
  } catch (const CoherenceFailure& f) {
    return trace_error(RuntimeError{"coherence-error", f.error.describe()},
                       f.error);
  } catch (const RuntimeError& e) {
    return trace_error(e);
  } catch (const std::exception& e) {
    return trace_error(RuntimeError{"internal-error", e.what()});
  }
}

AdaptationOutcome Engine::dispatch_event(SoftwareInstance& instance,
                                         const EventId& event) {
  trace_.append("EVENT " + event);
  try {
    if (event == kCreationEvent) {
      trace_.append(
          "WARN creation-replay the creation clause fires only at instance "
          "creation");
      return Ignored{"creation-replay"};
    }
    const GAProc& proc = lifecycle_of(instance);
    const GAProcClause* clause = proc.find_clause(event);
    if (clause == nullptr) {
      trace_.append("WARN unhandled-event event '" + event +
                    "' has no clause in GAProc '" + proc.id + "'");
      return Ignored{"unhandled-event"};
    }
    const SoftwareConfiguration& cfg = current_configuration(instance);
    if (!cfg.expects_event(event)) {
      trace_.append("WARN unexpected-event event '" + event +
                    "' is not declared by configuration '" + cfg.name + "'");
    }
    if (const GAProg* prog = cfg.find_gaprog(clause->target);
        prog != nullptr) {
      return run_state_clause(instance, *clause, cfg);
    }
    if (const MetamorphosisProgram* program =
            cfg.find_metamorphosis(clause->target);
        program != nullptr) {
      return run_metamorphosis(instance, *program, clause->behavior);
    }
    throw RuntimeError{"unresolved-target",
                       "'" + clause->target +
                           "' names no GAProg or Metamorphosis_Program of "
                           "configuration '" +
                           cfg.name + "'"};
  } catch (const CoherenceFailure& f) {
    return Failed{trace_error(
        RuntimeError{"coherence-error", f.error.describe()}, f.error)};
  } catch (const RuntimeError& e) {
    return Failed{trace_error(e)};
  } catch (const std::exception& e) {
    return Failed{trace_error(RuntimeError{"internal-error", e.what()})};
  }
}

AdaptationOutcome Engine::run_state_clause(SoftwareInstance& instance,
                                           const GAProcClause& clause,
                                           const SoftwareConfiguration& cfg) {
  const GAProg* prog = cfg.find_gaprog(clause.target);
  assert(prog != nullptr);
  if (clause.behavior.has_value() &&
      cfg.find_behavior(*clause.behavior) == nullptr) {
    throw RuntimeError{"unresolved-behavior",
                       "behavior '" + *clause.behavior +
                           "' is not defined by configuration '" + cfg.name +
                           "'"};
  }
  FeatureState next = instance.feature_state;
  coherence::Closure closure = apply_or_throw(next, *prog, cfg.relations);
  instance.feature_state = std::move(next);
  instance.current_state = prog->id;
  instance.active_behavior = clause.behavior;
  trace_state_records(prog->id, clause.behavior, closure);
  return StateChanged{prog->id, clause.behavior};
}

AdaptationOutcome Engine::run_metamorphosis(
    SoftwareInstance& instance, const MetamorphosisProgram& program,
    const std::optional<Identifier>& behavior) {
  if (!instance.current_state.has_value() ||
      *instance.current_state != program.from_state) {
    throw RuntimeError{"wrong-source-state",
                       "instance is at state '" +
                           (instance.current_state.has_value()
                                ? *instance.current_state
                                : std::string("-")) +
                           "' but '" + program.id + "' leaves from '" +
                           program.from_state + "'"};
  }
  const SoftwareConfiguration* target =
      model_.find_configuration(program.target_configuration);
  if (target == nullptr) {
    throw RuntimeError{"missing-configuration",
                       "configuration '" + program.target_configuration +
                           "' is not loaded"};
  }
  const GAProg* to_prog = target->find_gaprog(program.to_state);
  if (to_prog == nullptr) {
    throw RuntimeError{"unknown-state",
                       "state '" + program.to_state +
                           "' is not a GAProg of configuration '" +
                           target->name + "'"};
  }
  if (behavior.has_value() &&
      target->find_behavior(*behavior) == nullptr) {
    throw RuntimeError{"unresolved-behavior",
                       "behavior '" + *behavior +
                           "' is not defined by target configuration '" +
                           target->name + "'"};
  }
  const Transition* transition = transitions_.find(program.transition_fn);
  if (transition == nullptr) {
    throw RuntimeError{"unknown-transition-fn",
                       "no transition '" + program.transition_fn +
                           "' is registered"};
  }

  FeatureState next;
  for (const FeatureId& f : target->features) next[f] = false;
  coherence::Closure closure =
      apply_or_throw(next, *to_prog, target->relations);

  Store fresh;
  (*transition)(instance.store, fresh);

  instance.configuration = target->name;
  instance.feature_state = std::move(next);
  instance.current_state = to_prog->id;
  instance.active_behavior = behavior;
  instance.store = std::move(fresh);

  trace_.append("METAMORPHOSE " + program.id + " TO " + target->name);
  trace_state_records(to_prog->id, behavior, closure);
  return Metamorphosed{program.id, target->name};
}

std::optional<OpError> Engine::execute_behavior(SoftwareInstance& instance,
                                                int max_steps) {
  try {
    if (!instance.active_behavior.has_value()) {
      throw RuntimeError{"no-active-behavior",
                         "instance '" + instance.id +
                             "' has no active behavior"};
    }
    const SoftwareConfiguration& cfg = current_configuration(instance);
    const Behavior* behavior = cfg.find_behavior(*instance.active_behavior);
    if (behavior == nullptr) {
      throw RuntimeError{"unresolved-behavior",
                         "behavior '" + *instance.active_behavior +
                             "' is not defined by configuration '" + cfg.name +
                             "'"};
    }

    // Every feature the behavior mentions must be enabled before anything
    // executes; the first disabled one (in first-mention order) aborts.
    std::vector<FeatureId> mentioned;
    std::set<FeatureId> seen;
    for (const BehaviorEdge& edge : behavior->edges) {
      for (const FeatureId* f : {&edge.from, &edge.to}) {
        if (seen.insert(*f).second) mentioned.push_back(*f);
      }
    }
    for (const FeatureId& f : mentioned) {
      if (!instance.is_enabled(f)) {
        throw RuntimeError{"behavior-feature-disabled",
                           "feature '" + f + "' required by behavior '" +
                               behavior->id + "' is disabled"};
      }
    }

    FeatureId current = behavior->start();
    Value out = execute_feature(instance, current, std::nullopt);
    int steps = 1;
    while (true) {
      const BehaviorEdge* chosen = nullptr;
      for (const BehaviorEdge& edge : behavior->edges) {
        if (edge.from != current) continue;
        if (guards_hold(edge.guards, out)) {
          chosen = &edge;
          break;
        }
      }
      if (chosen == nullptr) break;
      if (steps >= max_steps) {
        std::ostringstream msg;
        msg << "behavior '" << behavior->id << "' exceeded " << max_steps
            << " steps";
        throw RuntimeError{"step-limit-exceeded", msg.str()};
      }
      out = execute_feature(instance, chosen->to, std::nullopt);
      ++steps;
      current = chosen->to;
    }
    return std::nullopt;
  } catch (const RuntimeError& e) {
    return trace_error(e);
  } catch (const std::exception& e) {
    return trace_error(RuntimeError{"internal-error", e.what()});
  }
}

std::variant<Value, OpError> Engine::invoke_feature(
    SoftwareInstance& instance, const FeatureId& feature,
    const std::optional<Value>& input) {
  try {
    const SoftwareConfiguration& cfg = current_configuration(instance);
    if (!cfg.has_feature(feature)) {
      throw RuntimeError{"unknown-feature",
                         "configuration '" + cfg.name + "' has no feature '" +
                             feature + "'"};
    }
    if (!instance.is_enabled(feature)) {
      throw RuntimeError{"feature-disabled",
                         "feature '" + feature + "' is disabled"};
    }
    return execute_feature(instance, feature, input);
  } catch (const RuntimeError& e) {
    return trace_error(e);
  } catch (const std::exception& e) {
    return trace_error(RuntimeError{"internal-error", e.what()});
  }
}

Value Engine::stub_output(const FeatureId& feature) {
  const std::vector<Value>& values = stubs_.outputs.at(feature);
  std::size_t& cursor = stub_cursors_[feature];
  std::size_t idx = cursor < values.size() ? cursor : values.size() - 1;
  ++cursor;
  return values[idx];
}

Value Engine::execute_feature(SoftwareInstance& instance,
                              const FeatureId& feature,
                              const std::optional<Value>& input) {
  if (!instance.is_enabled(feature)) {
    throw RuntimeError{"feature-disabled",
                       "feature '" + feature + "' is disabled"};
  }
  Value output;
  if (stubs_.outputs.count(feature) > 0) {
    output = stub_output(feature);
  } else if (const Handler* handler = features_.find(feature);
             handler != nullptr) {
    output = (*handler)(instance.store, input);
  } else if (stub_mode_) {
    output = Value(std::string("ok"));
  } else {
    throw RuntimeError{"unbound-feature",
                       "feature '" + feature + "' has no handler"};
  }
  trace_.append("EXEC " + feature + " IN " +
                (input.has_value() ? input->render() : "-") + " OUT " +
                output.render());
  return output;
}

void Engine::snapshot(const SoftwareInstance& instance) {
  std::ostringstream line;
  line << "SNAPSHOT enabled=[";
  bool first = true;
  for (const auto& [feature, on] : instance.feature_state) {
    if (!on) continue;
    if (!first) line << ",";
    first = false;
    line << feature;
  }
  line << "] store=" << render_store(instance.store);
  trace_.append(line.str());
}

}  // namespace gaf::runtime
