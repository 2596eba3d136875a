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

// Acceptance gate: every release-blocking behavior is checked here, one
// [PASS]/[FAIL] line per criterion. Exit code is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "gaf/coherence.hpp"
#include "gaf/formatter.hpp"
#include "gaf/linker.hpp"
#include "gaf/parser.hpp"
#include "gaf/runtime.hpp"
#include "gaf/script.hpp"
#include "testutil.hpp"

namespace gaf {
namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string name;
  std::function<void(std::ostream& why, bool& ok)> run;
  double budget_seconds;
};

// ---------------------------------------------------------------------------
// Helpers

runtime::Engine corpus_engine(const LinkedModel& model) {
  return runtime::Engine(model, runtime::FeatureRegistry::with_list_ops(),
                         runtime::TransitionRegistry::with_builtins(),
                         /*stub_mode=*/true);
}

LinkedModel load_fixture(const std::string& relative) {
  std::string path = test::corpus_path(relative);
  auto result = analyze({{path, test::read_file(path)}});
  if (auto* model = std::get_if<LinkedModel>(&result)) return std::move(*model);
  throw std::runtime_error("fixture failed to link: " + relative);
}

// ---------------------------------------------------------------------------
// Criterion 1: queue-then-stack scenario reproduces its golden trace.

void check_list1(std::ostream& why, bool& ok) {
  std::vector<std::string> args = {"run"};
  for (const std::string& f : test::list_corpus_files()) args.push_back(f);
  args.push_back("--script");
  args.push_back(test::corpus_path("list/list1.events"));
  test::CliResult r = test::run_cli(args);
  std::string golden = test::read_file(test::corpus_path("list/list1.trace.golden"));
  if (r.exit_code != 0) {
    ok = false;
    why << "exit code " << r.exit_code;
    return;
  }
  if (r.out != golden) {
    ok = false;
    why << "trace differs from golden file";
    return;
  }
  // The trace must show creation into StQueue with Q_Beh0 and an eventi
  // transition into StStack with S_Beh0.
  for (const char* needle :
       {"CREATE List1 CONFIG Static_List PROC Static",
        "STATE StQueue BEHAVIOR Q_Beh0", "EVENT eventi",
        "STATE StStack BEHAVIOR S_Beh0"}) {
    if (golden.find(needle) == std::string::npos) {
      ok = false;
      why << "golden trace lacks '" << needle << "'";
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 2: metamorphosis scenario — five values queued before the
// configuration switch come back out in order afterwards; identity and
// lifecycle survive.

void check_list2(std::ostream& why, bool& ok) {
  std::vector<std::string> args = {"run"};
  for (const std::string& f : test::list_corpus_files()) args.push_back(f);
  args.push_back("--script");
  args.push_back(test::corpus_path("list/list2.events"));
  test::CliResult r = test::run_cli(args);
  std::string golden = test::read_file(test::corpus_path("list/list2.trace.golden"));
  if (r.exit_code != 0 || r.out != golden) {
    ok = false;
    why << "CLI trace mismatch (exit " << r.exit_code << ")";
    return;
  }
  if (golden.find("METAMORPHOSE StQueueToDyQueue TO Dynamic_List") ==
      std::string::npos) {
    ok = false;
    why << "golden trace lacks the metamorphosis record";
    return;
  }
  // The five dequeues output 1..5 in order.
  std::size_t pos = 0;
  for (int i = 1; i <= 5; ++i) {
    std::string needle = "EXEC GetFromBeg IN - OUT " + std::to_string(i);
    std::size_t at = golden.find(needle, pos);
    if (at == std::string::npos) {
      ok = false;
      why << "missing or out-of-order '" << needle << "'";
      return;
    }
    pos = at + needle.size();
  }

  // In-process: id and lifecycle are untouched by the metamorphosis.
  LinkedModel model = test::load_list_model();
  runtime::Engine engine = corpus_engine(model);
  runtime::ScriptResult result = runtime::run_script(
      engine, test::read_file(test::corpus_path("list/list2.events")));
  if (result.exit_code != 0 || !result.instance.has_value()) {
    ok = false;
    why << "in-process run failed";
    return;
  }
  const SoftwareInstance& inst = *result.instance;
  if (inst.id != "List2" || inst.lifecycle != "StaticToDynamic") {
    ok = false;
    why << "identity or lifecycle changed across the metamorphosis";
    return;
  }
  if (inst.configuration != "Dynamic_List") {
    ok = false;
    why << "instance did not reach the target configuration";
  }
}

// ---------------------------------------------------------------------------
// Criterion 3: the worklist engine matches a naive iterate-to-fixpoint
// oracle on 1000 random models.

void check_oracle(std::ostream& why, bool& ok) {
  std::mt19937 rng(987654321);
  int agreements = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    test::CoherenceCase c = test::random_coherence_case(rng);
    auto engine_result =
        coherence::propagate(c.enabled_seed, c.disabled_seed, c.relations);
    test::OracleResult oracle =
        test::naive_fixpoint(c.enabled_seed, c.disabled_seed, c.relations);
    bool engine_conflict =
        std::holds_alternative<coherence::CoherenceError>(engine_result);
    if (engine_conflict != oracle.conflict) {
      ok = false;
      why << "case " << i << ": verdict mismatch";
      return;
    }
    if (!engine_conflict) {
      const auto& closure = std::get<coherence::Closure>(engine_result);
      std::set<FeatureId> enabled(closure.enabled_actions.begin(),
                                  closure.enabled_actions.end());
      std::set<FeatureId> disabled(closure.disabled_actions.begin(),
                                   closure.disabled_actions.end());
      if (enabled != oracle.enabled || disabled != oracle.disabled) {
        ok = false;
        why << "case " << i << ": closure sets differ from oracle";
        return;
      }
    }
    ++agreements;
  }
  if (agreements != total) {
    ok = false;
    why << agreements << "/" << total << " agreements";
  }
}

// ---------------------------------------------------------------------------
// Criterion 4: propagation outcome is independent of worklist order.

void check_confluence(std::ostream& why, bool& ok) {
  std::mt19937 rng(1122334455);
  for (int i = 0; i < 200; ++i) {
    test::CoherenceCase c = test::random_coherence_case(rng);
    auto baseline =
        coherence::propagate(c.enabled_seed, c.disabled_seed, c.relations);
    bool base_conflict =
        std::holds_alternative<coherence::CoherenceError>(baseline);
    std::set<FeatureId> base_enabled;
    std::set<FeatureId> base_disabled;
    if (!base_conflict) {
      const auto& closure = std::get<coherence::Closure>(baseline);
      base_enabled.insert(closure.enabled_actions.begin(),
                          closure.enabled_actions.end());
      base_disabled.insert(closure.disabled_actions.begin(),
                           closure.disabled_actions.end());
    }
    for (int p = 0; p < 50; ++p) {
      std::mt19937 order_rng(static_cast<std::uint32_t>(i * 50 + p));
      auto pick = [&order_rng](std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(order_rng);
      };
      auto permuted = coherence::propagate_any_order(
          c.enabled_seed, c.disabled_seed, c.relations, pick);
      bool perm_conflict =
          std::holds_alternative<coherence::CoherenceError>(permuted);
      if (perm_conflict != base_conflict) {
        ok = false;
        why << "case " << i << " permutation " << p << ": verdict changed";
        return;
      }
      if (!perm_conflict) {
        const auto& closure = std::get<coherence::Closure>(permuted);
        std::set<FeatureId> enabled(closure.enabled_actions.begin(),
                                    closure.enabled_actions.end());
        std::set<FeatureId> disabled(closure.disabled_actions.begin(),
                                     closure.disabled_actions.end());
        if (enabled != base_enabled || disabled != base_disabled) {
          ok = false;
          why << "case " << i << " permutation " << p << ": sets changed";
          return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 5: an Enable(a)/Disable(b) program under Enable (a) Implies
// Enable (b) fails naming feature b with both chains; a mid-lifecycle
// application leaves the instance observably unchanged.

void check_conflict(std::ostream& why, bool& ok) {
  LinkedModel model = load_fixture("fixtures/conflict.gaf");
  runtime::Engine engine = corpus_engine(model);
  auto created =
      engine.create_instance("C1", "ConflictDomain", "Conflicted", "Life");
  if (!std::holds_alternative<SoftwareInstance>(created)) {
    ok = false;
    why << "fixture creation failed";
    return;
  }
  SoftwareInstance inst = std::get<SoftwareInstance>(std::move(created));
  SoftwareInstance before = inst;

  runtime::AdaptationOutcome outcome = engine.dispatch_event(inst, "boom");
  const auto* failed = std::get_if<runtime::Failed>(&outcome);
  if (failed == nullptr || failed->error.code != "coherence-error" ||
      !failed->error.coherence.has_value()) {
    ok = false;
    why << "dispatch did not fail with a structured coherence error";
    return;
  }
  const coherence::CoherenceError& err = *failed->error.coherence;
  if (err.feature != "b") {
    ok = false;
    why << "conflict names feature '" << err.feature << "', not 'b'";
    return;
  }
  if (coherence::render_chain(err.enable_chain) !=
          "b <- [Enable (a) Implies Enable (b)] <- a <- seed Enable clause" ||
      coherence::render_chain(err.disable_chain) !=
          "b <- seed Disable clause") {
    ok = false;
    why << "derivation chains are not the expected ones";
    return;
  }
  if (!(inst == before)) {
    ok = false;
    why << "instance changed despite the failed adaptation";
    return;
  }

  // The same failure surfaces through the CLI with exit code 1.
  test::CliResult r = test::run_cli(
      {"run", test::corpus_path("fixtures/conflict.gaf"), "--script",
       test::corpus_path("fixtures/conflict.events")});
  if (r.exit_code != 1 ||
      r.out.find("ERROR coherence-error feature b") == std::string::npos) {
    ok = false;
    why << "CLI did not surface the conflict (exit " << r.exit_code << ")";
  }
}

// ---------------------------------------------------------------------------
// Criterion 6: a behavior referencing any disabled feature refuses to run,
// with zero EXEC records — corpus fixture plus 100 random combinations.

int exec_count(const runtime::Trace& trace) {
  int n = 0;
  for (const std::string& line : trace.lines()) {
    if (line.rfind("EXEC ", 0) == 0) ++n;
  }
  return n;
}

void check_behavior_rule(std::ostream& why, bool& ok) {
  // Corpus fixture.
  LinkedModel fixture = load_fixture("fixtures/broken_behavior.gaf");
  runtime::Engine engine = corpus_engine(fixture);
  auto created =
      engine.create_instance("B1", "BehaviorDomain", "Lopsided", "Life");
  if (!std::holds_alternative<SoftwareInstance>(created)) {
    ok = false;
    why << "fixture creation failed";
    return;
  }
  SoftwareInstance inst = std::get<SoftwareInstance>(std::move(created));
  auto err = engine.execute_behavior(inst);
  if (!err.has_value() || err->code != "behavior-feature-disabled" ||
      exec_count(engine.trace()) != 0) {
    ok = false;
    why << "corpus fixture did not refuse cleanly";
    return;
  }

  // Random behavior/state combinations.
  std::mt19937 rng(5556667);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<int> nf(2, 8);
    int n = nf(rng);
    SoftwareDatabase db;
    db.name = "D";
    SoftwareConfiguration cfg;
    cfg.name = "C";
    cfg.database = "D";
    for (int i = 0; i < n; ++i) {
      FeatureId f = "f" + std::to_string(i);
      db.features.push_back(FeatureDecl{f, FeatureKind::kMethod, {}});
      cfg.features.push_back(f);
    }
    Behavior beh;
    beh.id = "B";
    std::uniform_int_distribution<int> pick(0, n - 1);
    int edges = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int e = 0; e < edges; ++e) {
      BehaviorEdge edge;
      edge.from = "f" + std::to_string(pick(rng));
      edge.to = "f" + std::to_string(pick(rng));
      beh.edges.push_back(std::move(edge));
    }
    cfg.behaviors.push_back(beh);
    LinkedModel model;
    model.databases.push_back(db);
    model.configurations.push_back(cfg);

    SoftwareInstance random_inst;
    random_inst.id = "X";
    random_inst.configuration = "C";
    random_inst.lifecycle = "L";
    random_inst.lifecycle_owner = "C";
    random_inst.active_behavior = "B";
    std::bernoulli_distribution coin(0.5);
    for (const FeatureId& f : cfg.features) {
      random_inst.feature_state[f] = coin(rng);
    }
    std::vector<FeatureId> mentioned;
    for (const BehaviorEdge& e : beh.edges) {
      mentioned.push_back(e.from);
      mentioned.push_back(e.to);
    }
    std::size_t victim = static_cast<std::size_t>(
        std::uniform_int_distribution<int>(
            0, static_cast<int>(mentioned.size()) - 1)(rng));
    random_inst.feature_state[mentioned[victim]] = false;

    runtime::Engine random_engine(model, runtime::FeatureRegistry(),
                                  runtime::TransitionRegistry(),
                                  /*stub_mode=*/true);
    auto random_err = random_engine.execute_behavior(random_inst);
    if (!random_err.has_value() ||
        random_err->code != "behavior-feature-disabled" ||
        exec_count(random_engine.trace()) != 0) {
      ok = false;
      why << "random combination " << round << " did not refuse cleanly";
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 7: parse -> format -> parse is the identity on every corpus
// file and on 500 random units; formatting is idempotent.

void check_round_trip(std::ostream& why, bool& ok) {
  std::vector<std::string> files = test::list_corpus_files();
  files.push_back(test::corpus_path("fixtures/conflict.gaf"));
  files.push_back(test::corpus_path("fixtures/broken_behavior.gaf"));
  for (const std::string& path : files) {
    auto first = dsl::parse_unit(path, test::read_file(path));
    if (!std::holds_alternative<dsl::SourceUnit>(first)) {
      ok = false;
      why << path << " failed to parse";
      return;
    }
    const auto& unit = std::get<dsl::SourceUnit>(first);
    std::string once = dsl::format_unit(unit);
    auto second = dsl::parse_unit(path, once);
    if (!std::holds_alternative<dsl::SourceUnit>(second)) {
      ok = false;
      why << path << ": formatted text failed to reparse";
      return;
    }
    const auto& reparsed = std::get<dsl::SourceUnit>(second);
    if (!(unit.items == reparsed.items)) {
      ok = false;
      why << path << ": structure changed across the round trip";
      return;
    }
    if (dsl::format_unit(reparsed) != once) {
      ok = false;
      why << path << ": formatting is not idempotent";
      return;
    }
  }

  test::UnitGenerator gen(31415926);
  for (int i = 0; i < 500; ++i) {
    dsl::SourceUnit unit = gen.random_unit();
    std::string once = dsl::format_unit(unit);
    auto reparsed = dsl::parse_unit("<gen>", once);
    if (!std::holds_alternative<dsl::SourceUnit>(reparsed)) {
      ok = false;
      why << "random unit " << i << ": formatted text failed to reparse";
      return;
    }
    const auto& round = std::get<dsl::SourceUnit>(reparsed);
    if (!(unit.items == round.items)) {
      ok = false;
      why << "random unit " << i << ": structure changed across the round trip";
      return;
    }
    if (dsl::format_unit(round) != once) {
      ok = false;
      why << "random unit " << i << ": formatting is not idempotent";
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Criterion 8: consecutive runs of each corpus scenario are byte-identical.

void check_determinism(std::ostream& why, bool& ok) {
  struct Scenario {
    std::vector<std::string> files;
    std::string script;
  };
  std::vector<Scenario> scenarios = {
      {test::list_corpus_files(), test::corpus_path("list/list1.events")},
      {test::list_corpus_files(), test::corpus_path("list/list2.events")},
      {{test::corpus_path("fixtures/conflict.gaf")},
       test::corpus_path("fixtures/conflict.events")},
  };
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    std::vector<std::string> args = {"run"};
    for (const std::string& f : scenarios[i].files) args.push_back(f);
    args.push_back("--script");
    args.push_back(scenarios[i].script);
    test::CliResult first = test::run_cli(args);
    test::CliResult second = test::run_cli(args);
    if (first.out != second.out || first.exit_code != second.exit_code) {
      ok = false;
      why << "scenario " << i << " differed across consecutive runs";
      return;
    }
  }
}

}  // namespace
}  // namespace gaf

int main() {
  using gaf::Criterion;
  std::vector<Criterion> criteria = {
      {"golden-trace-queue-to-stack", gaf::check_list1, 1.0},
      {"metamorphosis-preserves-queue-and-identity", gaf::check_list2, 1.0},
      {"closure-matches-naive-oracle-1000-models", gaf::check_oracle, 5.0},
      {"confluence-200-models-50-orders", gaf::check_confluence, 10.0},
      {"conflict-names-feature-and-chains-atomically", gaf::check_conflict,
       10.0},
      {"disabled-feature-blocks-behavior-without-exec",
       gaf::check_behavior_rule, 10.0},
      {"parse-format-parse-identity-and-idempotence", gaf::check_round_trip,
       10.0},
      {"byte-identical-traces-across-runs", gaf::check_determinism, 10.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    bool ok = true;
    std::ostringstream why;
    auto start = gaf::Clock::now();
    try {
      criterion.run(why, ok);
    } catch (const std::exception& e) {
      ok = false;
      why << "exception: " << e.what();
    }
    double elapsed =
        std::chrono::duration<double>(gaf::Clock::now() - start).count();
    if (ok && elapsed > criterion.budget_seconds) {
      ok = false;
      why << "took " << elapsed << "s (budget " << criterion.budget_seconds
          << "s)";
    }
    if (ok) {
      std::cout << "[PASS] " << criterion.name << "\n";
    } else {
      std::cout << "[FAIL] " << criterion.name << " — " << why.str() << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
