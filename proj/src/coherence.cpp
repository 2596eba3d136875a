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

#include "gaf/coherence.hpp"

#include <cassert>
#include <deque>
#include <set>
#include <sstream>

namespace gaf::coherence {
namespace {

ActionMode opposite(ActionMode mode) {
  return mode == ActionMode::kEnable ? ActionMode::kDisable
                                     : ActionMode::kEnable;
}

// Shared propagation state: the two ordered lists, one justification per
// member, and the conflict detector. Worklist policy stays with the caller.
class Propagator {
 public:
  // Adds `feature` to the `mode` list. Returns true when newly added; a
  // repeat addition to the same list is ignored (the first justification
  // wins). Addition to the opposite list records a CoherenceError.
  bool add(ActionMode mode, const FeatureId& feature,
           std::optional<Relation> via, std::optional<FeatureId> source) {
    auto it = membership_.find(feature);
    if (it != membership_.end()) {
      if (it->second == mode) return false;
      record_conflict(mode, feature, std::move(via), std::move(source));
      return false;
    }
    membership_.emplace(feature, mode);
    list_for(mode).push_back(feature);
    closure_.derivations.emplace(
        feature, Derivation{mode, std::move(via), std::move(source)});
    closure_.sequence.emplace_back(mode, feature);
    return true;
  }

  // Fires every relation triggered by `feature` having entered the `mode`
  // list, scanning in declaration order. Newly added features are reported
  // through `enqueue`. Returns false once a conflict has been recorded.
  bool fire(ActionMode mode, const FeatureId& feature,
            const RelationSet& relations,
            const std::function<void(ActionMode, const FeatureId&)>& enqueue) {
    for (const Relation& rel : relations.relations) {
      if (rel.trigger_mode != mode || rel.trigger != feature) continue;
      ActionMode target_mode =
          rel.verb == RelationVerb::kImplies ? mode : opposite(mode);
      if (add(target_mode, rel.target, rel, feature)) {
        enqueue(target_mode, rel.target);
      }
      if (error_.has_value()) return false;
    }
    return true;
  }

  bool has_error() const { return error_.has_value(); }

  CoherenceError take_error() { return std::move(*error_); }

  Closure take_closure() {
    assert(!error_.has_value());
    return std::move(closure_);
  }

  // Walks a member's justification back to its seed. Every derivation's
  // source entered a list strictly earlier, so the walk terminates.
  Chain chain_of(const FeatureId& feature) const {
    Chain chain;
    const FeatureId* cur = &feature;
    while (true) {
      const Derivation& d = closure_.derivations.at(*cur);
      chain.push_back(ChainStep{*cur, d.mode, d.via});
      if (!d.via.has_value()) break;
      cur = &*d.source;
    }
    return chain;
  }

 private:
  std::vector<FeatureId>& list_for(ActionMode mode) {
    return mode == ActionMode::kEnable ? closure_.enabled_actions
                                       : closure_.disabled_actions;
  }

  void record_conflict(ActionMode new_mode, const FeatureId& feature,
                       std::optional<Relation> via,
                       std::optional<FeatureId> source) {
    // The stored chain justifies the opposite list; the attempted addition
    // justifies `new_mode`, its tail being the trigger's own chain.
    Chain existing = chain_of(feature);
    Chain attempted;
    attempted.push_back(ChainStep{feature, new_mode, std::move(via)});
    if (source.has_value()) {
      Chain tail = chain_of(*source);
      attempted.insert(attempted.end(), tail.begin(), tail.end());
    }
    CoherenceError err;
    err.feature = feature;
    if (new_mode == ActionMode::kEnable) {
      err.enable_chain = std::move(attempted);
      err.disable_chain = std::move(existing);
    } else {
      err.enable_chain = std::move(existing);
      err.disable_chain = std::move(attempted);
    }
    error_ = std::move(err);
  }

  Closure closure_;
  std::map<FeatureId, ActionMode> membership_;
  std::optional<CoherenceError> error_;
};

// The literal seed-intersection check, before any propagation.
std::optional<CoherenceError> check_seed_intersection(
    const std::vector<FeatureId>& enabled_seed,
    const std::vector<FeatureId>& disabled_seed) {
  std::set<FeatureId> disabled(disabled_seed.begin(), disabled_seed.end());
  for (const FeatureId& f : enabled_seed) {
    if (disabled.count(f) > 0) {
      CoherenceError err;
      err.feature = f;
      err.enable_chain = {ChainStep{f, ActionMode::kEnable, std::nullopt}};
      err.disable_chain = {ChainStep{f, ActionMode::kDisable, std::nullopt}};
      return err;
    }
  }
  return std::nullopt;
}

// Seeds both lists; enabled seeds first so trace records lead with the
// program's own Enable actions. Returns false on (defensive) conflict.
bool seed_propagator(Propagator& p, const std::vector<FeatureId>& enabled_seed,
                     const std::vector<FeatureId>& disabled_seed,
                     std::vector<FeatureId>& enabled_added,
                     std::vector<FeatureId>& disabled_added) {
  for (const FeatureId& f : enabled_seed) {
    if (p.add(ActionMode::kEnable, f, std::nullopt, std::nullopt))
      enabled_added.push_back(f);
    if (p.has_error()) return false;
  }
  for (const FeatureId& f : disabled_seed) {
    if (p.add(ActionMode::kDisable, f, std::nullopt, std::nullopt))
      disabled_added.push_back(f);
    if (p.has_error()) return false;
  }
  return true;
}

}  // namespace

std::string render_chain(const Chain& chain) {
  std::ostringstream out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const ChainStep& step = chain[i];
    if (i == 0) out << step.feature;
    if (step.via.has_value()) {
      out << " <- [" << to_source(*step.via) << "] <- "
          << chain[i + 1].feature;
    } else {
      out << " <- seed " << to_string(step.mode) << " clause";
    }
  }
  return out.str();
}

std::optional<Chain> Closure::chain_for(const FeatureId& feature) const {
  if (derivations.count(feature) == 0) return std::nullopt;
  Chain chain;
  const FeatureId* cur = &feature;
  while (true) {
    const Derivation& d = derivations.at(*cur);
    chain.push_back(ChainStep{*cur, d.mode, d.via});
    if (!d.via.has_value()) break;
    cur = &*d.source;
  }
  return chain;
}

std::string CoherenceError::describe() const {
  std::ostringstream out;
  out << "feature " << feature << ": enabled via " << render_chain(enable_chain)
      << "; disabled via " << render_chain(disable_chain);
  return out.str();
}

std::pair<std::vector<FeatureId>, std::vector<FeatureId>> seed_lists(
    const GAProg& gaprog) {
  auto collect = [](const std::vector<std::vector<FeatureId>>& clauses) {
    std::vector<FeatureId> out;
    std::set<FeatureId> seen;
    for (const std::vector<FeatureId>& clause : clauses) {
      for (const FeatureId& f : clause) {
        if (seen.insert(f).second) out.push_back(f);
      }
    }
    return out;
  };
  return {collect(gaprog.enable_clauses), collect(gaprog.disable_clauses)};
}

std::variant<Closure, CoherenceError> propagate(
    const std::vector<FeatureId>& enabled_seed,
    const std::vector<FeatureId>& disabled_seed,
    const RelationSet& relations) {
  if (auto err = check_seed_intersection(enabled_seed, disabled_seed))
    return std::move(*err);

  Propagator p;
  std::vector<FeatureId> enabled_added;
  std::vector<FeatureId> disabled_added;
  if (!seed_propagator(p, enabled_seed, disabled_seed, enabled_added,
                       disabled_added)) {
    return p.take_error();
  }

  std::deque<FeatureId> work_enabled(enabled_added.begin(),
                                     enabled_added.end());
  std::deque<FeatureId> work_disabled(disabled_added.begin(),
                                      disabled_added.end());
  auto enqueue = [&](ActionMode mode, const FeatureId& f) {
    (mode == ActionMode::kEnable ? work_enabled : work_disabled).push_back(f);
  };

  // Each round drains the disabled worklist, then the enabled one; features
  // derived into the other list wait for the next round.
  while (!work_disabled.empty() || !work_enabled.empty()) {
    while (!work_disabled.empty()) {
      FeatureId f = std::move(work_disabled.front());
      work_disabled.pop_front();
      if (!p.fire(ActionMode::kDisable, f, relations, enqueue))
        return p.take_error();
    }
    while (!work_enabled.empty()) {
      FeatureId f = std::move(work_enabled.front());
      work_enabled.pop_front();
      if (!p.fire(ActionMode::kEnable, f, relations, enqueue))
        return p.take_error();
    }
  }

  Closure closure = p.take_closure();
  assert([&] {
    std::set<FeatureId> e(closure.enabled_actions.begin(),
                          closure.enabled_actions.end());
    for (const FeatureId& f : closure.disabled_actions)
      if (e.count(f) > 0) return false;
    return true;
  }());
  return closure;
}

std::variant<Closure, CoherenceError> propagate_any_order(
    const std::vector<FeatureId>& enabled_seed,
    const std::vector<FeatureId>& disabled_seed, const RelationSet& relations,
    const std::function<std::size_t(std::size_t)>& pick) {
  if (auto err = check_seed_intersection(enabled_seed, disabled_seed))
    return std::move(*err);

  Propagator p;
  std::vector<FeatureId> enabled_added;
  std::vector<FeatureId> disabled_added;
  if (!seed_propagator(p, enabled_seed, disabled_seed, enabled_added,
                       disabled_added)) {
    return p.take_error();
  }

  std::vector<std::pair<ActionMode, FeatureId>> pending;
  for (const FeatureId& f : enabled_added)
    pending.emplace_back(ActionMode::kEnable, f);
  for (const FeatureId& f : disabled_added)
    pending.emplace_back(ActionMode::kDisable, f);
  auto enqueue = [&](ActionMode mode, const FeatureId& f) {
    pending.emplace_back(mode, f);
  };

  while (!pending.empty()) {
    std::size_t idx = pick(pending.size()) % pending.size();
    auto [mode, feature] = std::move(pending[idx]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(idx));
    if (!p.fire(mode, feature, relations, enqueue)) return p.take_error();
  }
  return p.take_closure();
}

std::variant<Closure, CoherenceError> apply_gaprog(
    FeatureState& state, const GAProg& gaprog, const RelationSet& relations) {
  auto [enabled_seed, disabled_seed] = seed_lists(gaprog);
  auto result = propagate(enabled_seed, disabled_seed, relations);
  if (std::holds_alternative<CoherenceError>(result)) return result;
  const Closure& closure = std::get<Closure>(result);
  for (const FeatureId& f : closure.disabled_actions) state[f] = false;
  for (const FeatureId& f : closure.enabled_actions) state[f] = true;
  return result;
}

}  // namespace gaf::coherence
