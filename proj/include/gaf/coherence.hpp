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

#ifndef GAF_COHERENCE_HPP_
#define GAF_COHERENCE_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gaf/model.hpp"

namespace gaf::coherence {

// One step of a justification chain. `via` is the relation whose firing put
// `feature` on the list; a step without `via` is a seed clause membership.
// Chains run from the derived feature back to a seed, so the feature that
// triggered `via` is the next step's feature.
struct ChainStep {
  FeatureId feature;
  ActionMode mode = ActionMode::kEnable;
  std::optional<Relation> via;

  bool operator==(const ChainStep& other) const {
    return feature == other.feature && mode == other.mode && via == other.via;
  }
};

using Chain = std::vector<ChainStep>;

// Renders "b <- [Enable (a) Implies Enable (b)] <- a <- seed Enable clause".
std::string render_chain(const Chain& chain);

// How one feature entered one list during propagation.
struct Derivation {
  ActionMode mode = ActionMode::kEnable;
  std::optional<Relation> via;      // nullopt: seeded directly by the GAProg
  std::optional<FeatureId> source;  // the trigger feature, when via is set
};

// The computed least fixpoint of a GAProg's actions under a relation set.
struct Closure {
  std::vector<FeatureId> enabled_actions;   // final Enabled_List, in order
  std::vector<FeatureId> disabled_actions;  // final Disabled_List, in order
  std::map<FeatureId, Derivation> derivations;
  // Every membership event in the order it was established, interleaving
  // both lists; drives ENABLE/DISABLE trace records.
  std::vector<std::pair<ActionMode, FeatureId>> sequence;

  // Justification chain for a feature in either list; nullopt if unaffected.
  std::optional<Chain> chain_for(const FeatureId& feature) const;
};

// A feature was derived into both lists: the adaptation is incoherent.
struct CoherenceError {
  FeatureId feature;  // first feature found in both lists
  Chain enable_chain;
  Chain disable_chain;

  // "feature b: enabled via <chain>; disabled via <chain>"
  std::string describe() const;
};

// Seed lists from the GAProg's clauses: the union of Enable clauses in
// declaration order (first occurrence wins) and likewise for Disable.
std::pair<std::vector<FeatureId>, std::vector<FeatureId>> seed_lists(
    const GAProg& gaprog);

// Worklist propagation to the least fixpoint of the four relation rules:
//   Enable a Implies Enable b:   a enabled  => b enabled
//   Disable a Implies Disable b: a disabled => b disabled
//   Enable a Excludes Enable b:  a enabled  => b disabled
//   Disable a Excludes Disable b:a disabled => b enabled
// Relations fire on the actions of this application only. Each round drains
// the disabled worklist before the enabled one; relations are scanned in
// declaration order; coherence (E ∩ D = ∅) is checked on every addition.
std::variant<Closure, CoherenceError> propagate(
    const std::vector<FeatureId>& enabled_seed,
    const std::vector<FeatureId>& disabled_seed, const RelationSet& relations);

// Propagation variant whose next work item is chosen by `pick` from the
// pending items (0 <= pick(n) < n). Membership in the resulting lists is
// order-independent; only derivation chains and sequence may differ. Used
// to exercise confluence.
std::variant<Closure, CoherenceError> propagate_any_order(
    const std::vector<FeatureId>& enabled_seed,
    const std::vector<FeatureId>& disabled_seed, const RelationSet& relations,
    const std::function<std::size_t(std::size_t)>& pick);

// Applies a GAProg as a delta: features in the closure's disabled list
// become disabled, enabled list enabled, all others keep their prior
// status. `state` is untouched when propagation fails.
std::variant<Closure, CoherenceError> apply_gaprog(FeatureState& state,
                                                   const GAProg& gaprog,
                                                   const RelationSet& relations);

}  // namespace gaf::coherence

#endif  // GAF_COHERENCE_HPP_
