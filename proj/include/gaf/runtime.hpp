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

#ifndef GAF_RUNTIME_HPP_
#define GAF_RUNTIME_HPP_

#include <optional>
#include <string>
#include <variant>

#include "gaf/coherence.hpp"
#include "gaf/linker.hpp"
#include "gaf/model.hpp"
#include "gaf/registries.hpp"
#include "gaf/trace.hpp"
#include "gaf/value.hpp"

namespace gaf::runtime {

// Failure of a public engine operation. `coherence` is set when the cause
// was an incoherent adaptation ("coherence-error").
struct OpError {
  std::string code;
  std::string detail;
  std::optional<coherence::CoherenceError> coherence;
};

struct StateChanged {
  Identifier gaprog;
  std::optional<Identifier> behavior;
};

struct Metamorphosed {
  Identifier program;
  Identifier target_configuration;
};

struct Ignored {
  std::string reason;
};

struct Failed {
  OpError error;
};

using AdaptationOutcome =
    std::variant<StateChanged, Metamorphosed, Ignored, Failed>;

inline constexpr int kDefaultMaxSteps = 10000;

// One run session: owns the trace and the stub cursors; the model and the
// registries are immutable throughout. Public operations never throw — all
// failures become ERROR trace records plus Failed/OpError results, and a
// failed operation leaves its instance exactly as it was.
class Engine {
 public:
  Engine(const LinkedModel& model, FeatureRegistry features,
         TransitionRegistry transitions, bool stub_mode,
         StubScript stubs = {});

  Trace& trace() { return trace_; }
  const Trace& trace() const { return trace_; }
  const LinkedModel& model() const { return model_; }

  // Creates an instance: all features disabled, then the GAProc's creation
  // clause fires (initial state + behavior). Emits CREATE, STATE and the
  // closure's ENABLE/DISABLE records. Errors yield an ERROR record and no
  // instance.
  std::variant<SoftwareInstance, OpError> create_instance(
      const Identifier& instance_id, const Identifier& database,
      const Identifier& configuration, const Identifier& gaproc);

  // Dispatches an event through the instance's lifecycle GAProc. Emits the
  // EVENT record, then either the state-change records, the metamorphosis
  // records, a WARN (ignored), or an ERROR (failed, instance unchanged).
  AdaptationOutcome dispatch_event(SoftwareInstance& instance,
                                   const EventId& event);

  // Runs the active behavior graph: checks that every mentioned feature is
  // enabled (else "behavior-feature-disabled" with zero EXEC records), then
  // executes from the start feature, following the first edge whose guards
  // all hold for the last output. nullopt on success.
  std::optional<OpError> execute_behavior(SoftwareInstance& instance,
                                          int max_steps = kDefaultMaxSteps);

  // Executes one enabled feature against the instance store; EXEC record.
  std::variant<Value, OpError> invoke_feature(
      SoftwareInstance& instance, const FeatureId& feature,
      const std::optional<Value>& input);

  // Emits a SNAPSHOT record: enabled features and store, sorted by name.
  void snapshot(const SoftwareInstance& instance);

 private:
  struct ClauseAction;

  const SoftwareConfiguration& current_configuration(
      const SoftwareInstance& instance) const;
  const GAProc& lifecycle_of(const SoftwareInstance& instance) const;

  AdaptationOutcome run_state_clause(SoftwareInstance& instance,
                                     const GAProcClause& clause,
                                     const SoftwareConfiguration& cfg);
  AdaptationOutcome run_metamorphosis(SoftwareInstance& instance,
                                      const MetamorphosisProgram& program,
                                      const std::optional<Identifier>& behavior);

  // Applies a GAProg to a copy of `state`; traces nothing. Throws
  // RuntimeError("coherence-error") on conflict.
  coherence::Closure apply_or_throw(FeatureState& state, const GAProg& prog,
                                    const RelationSet& relations);

  void trace_state_records(const Identifier& gaprog,
                           const std::optional<Identifier>& behavior,
                           const coherence::Closure& closure);

  Value execute_feature(SoftwareInstance& instance, const FeatureId& feature,
                        const std::optional<Value>& input);
  Value stub_output(const FeatureId& feature);

  OpError trace_error(const RuntimeError& err,
                      std::optional<coherence::CoherenceError> cause =
                          std::nullopt);

  const LinkedModel& model_;
  FeatureRegistry features_;
  TransitionRegistry transitions_;
  bool stub_mode_;
  StubScript stubs_;
  std::map<FeatureId, std::size_t> stub_cursors_;
  Trace trace_;
};

}  // namespace gaf::runtime

#endif  // GAF_RUNTIME_HPP_
