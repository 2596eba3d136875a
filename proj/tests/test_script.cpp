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

#include <string>
#include <variant>

#include "doctest.h"
#include "gaf/script.hpp"
#include "testutil.hpp"

namespace gaf {
namespace {

using runtime::Engine;
using runtime::FeatureRegistry;
using runtime::ScriptResult;
using runtime::ScriptSession;
using runtime::TransitionRegistry;

Engine make_engine(const LinkedModel& model) {
  return Engine(model, FeatureRegistry::with_list_ops(),
                TransitionRegistry::with_builtins(), /*stub_mode=*/true);
}

std::string last_line(const Engine& engine) {
  REQUIRE(engine.trace().size() > 0);
  return engine.trace().lines().back();
}

TEST_CASE("the corpus scripts reproduce their golden traces in-process") {
  LinkedModel model = test::load_list_model();
  struct Case {
    const char* script;
    const char* golden;
  };
  for (const Case& c : {Case{"list/list1.events", "list/list1.trace.golden"},
                        Case{"list/list2.events", "list/list2.trace.golden"}}) {
    CAPTURE(c.script);
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine, test::read_file(test::corpus_path(c.script)));
    CHECK(result.exit_code == 0);
    CHECK(engine.trace().render() ==
          test::read_file(test::corpus_path(c.golden)));
  }
}

TEST_CASE("scripts abort at the first failing line") {
  LinkedModel model = test::load_list_model();
  Engine engine = make_engine(model);
  ScriptResult result = runtime::run_script(
      engine,
      "create L List Static_List Static\n"
      "invoke GetFromEnd\n"  // disabled under StQueue -> fails
      "dump\n");             // never runs
  CHECK(result.exit_code == 1);
  REQUIRE(result.instance.has_value());
  // No SNAPSHOT record: the dump line was never reached.
  for (const std::string& line : engine.trace().lines()) {
    CHECK(line.rfind("SNAPSHOT", 0) != 0);
  }
}

TEST_CASE("comments and blank lines are no-ops") {
  LinkedModel model = test::load_list_model();
  Engine engine = make_engine(model);
  ScriptResult result = runtime::run_script(
      engine,
      "# leading comment\n"
      "\n"
      "create L List Static_List Static  # trailing comment\n"
      "\n");
  CHECK(result.exit_code == 0);
  REQUIRE(result.instance.has_value());
  CHECK(result.instance->id == "L");
}

TEST_CASE("store and dump manipulate the instance directly") {
  LinkedModel model = test::load_list_model();
  Engine engine = make_engine(model);
  ScriptResult result = runtime::run_script(
      engine,
      "create L List Static_List Static\n"
      "store retries = 3\n"
      "store label = \"blue\"\n"
      "dump\n");
  CHECK(result.exit_code == 0);
  REQUIRE(result.instance.has_value());
  CHECK(result.instance->store.at("retries") == Value(3));
  CHECK(result.instance->store.at("label") == Value("blue"));
  CHECK(last_line(engine).rfind("SNAPSHOT", 0) == 0);
  CHECK(last_line(engine).find("label=blue") != std::string::npos);
  CHECK(last_line(engine).find("retries=3") != std::string::npos);
}

TEST_CASE("negative integers and strings pass through invoke") {
  LinkedModel model = test::load_list_model();
  Engine engine = make_engine(model);
  ScriptResult result = runtime::run_script(
      engine,
      "create L List Static_List Static\n"
      "invoke PutAtEnd -5\n"
      "invoke PutAtEnd \"text\"\n");
  CHECK(result.exit_code == 0);
  const auto& lines = engine.trace().lines();
  CHECK(lines[lines.size() - 2] == "EXEC PutAtEnd IN -5 OUT -5");
  CHECK(lines[lines.size() - 1] == "EXEC PutAtEnd IN text OUT text");
}

TEST_CASE("script errors carry the line number") {
  LinkedModel model = test::load_list_model();

  SUBCASE("command before create") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(engine, "\nbehave\n");
    CHECK(result.exit_code == 1);
    CHECK(last_line(engine) ==
          "ERROR script-error line 2: 'behave' before any instance was "
          "created");
  }
  SUBCASE("second create") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine,
        "create L List Static_List Static\n"
        "create M List Static_List Static\n");
    CHECK(result.exit_code == 1);
    CHECK(last_line(engine) ==
          "ERROR script-error line 2: an instance was already created");
  }
  SUBCASE("unknown command") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine, "create L List Static_List Static\nfrobnicate\n");
    CHECK(result.exit_code == 1);
    CHECK(last_line(engine) ==
          "ERROR script-error line 2: unknown command 'frobnicate'");
  }
  SUBCASE("malformed create") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(engine, "create L\n");
    CHECK(result.exit_code == 1);
    CHECK(last_line(engine).rfind("ERROR script-error line 1: usage: create",
                                  0) == 0);
  }
  SUBCASE("bad invoke input") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine,
        "create L List Static_List Static\n"
        "invoke PutAtEnd what = ever\n");
    CHECK(result.exit_code == 1);
  }
  SUBCASE("unterminated string") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine, "create L List Static_List Static\ninvoke PutAtEnd \"oops\n");
    CHECK(result.exit_code == 1);
    CHECK(last_line(engine) ==
          "ERROR script-error line 2: unterminated string");
  }
  SUBCASE("bad store assignment") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine, "create L List Static_List Static\nstore k 3\n");
    CHECK(result.exit_code == 1);
    CHECK(last_line(engine).rfind("ERROR script-error line 2: usage: store",
                                  0) == 0);
  }
}

TEST_CASE("a session survives failed lines") {
  // The interactive surface keeps going after an error, unlike run_script.
  LinkedModel model = test::load_list_model();
  Engine engine = make_engine(model);
  ScriptSession session(engine);
  CHECK(session.execute_line("create L List Static_List Static", 1));
  CHECK_FALSE(session.execute_line("invoke GetFromEnd", 2));  // disabled
  CHECK(session.execute_line("invoke PutAtEnd 1", 3));
  CHECK(session.execute_line("dump", 4));
  REQUIRE(session.instance().has_value());
  CHECK(session.instance()->store.at("items").as_sequence().size() == 1);
}

TEST_CASE("failed engine operations fail the script line") {
  LinkedModel model = test::load_list_model();

  SUBCASE("failed create leaves no instance") {
    Engine engine = make_engine(model);
    ScriptResult result =
        runtime::run_script(engine, "create L List Nope Static\n");
    CHECK(result.exit_code == 1);
    CHECK_FALSE(result.instance.has_value());
  }
  SUBCASE("ignored events do not fail the line") {
    Engine engine = make_engine(model);
    ScriptResult result = runtime::run_script(
        engine,
        "create L List Static_List Static\n"
        "event nonexistent\n"
        "dump\n");
    CHECK(result.exit_code == 0);  // WARN, not ERROR
  }
}

}  // namespace
}  // namespace gaf
