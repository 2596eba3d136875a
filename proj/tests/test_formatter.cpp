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

#include <memory>
#include <string>
#include <variant>

#include "doctest.h"
#include "gaf/formatter.hpp"
#include "gaf/parser.hpp"
#include "testutil.hpp"

namespace gaf {
namespace {

using dsl::SourceUnit;

SourceUnit reparse(const std::string& text) {
  auto result = dsl::parse_unit("<fmt>", text);
  if (auto* diags = std::get_if<std::vector<Diagnostic>>(&result)) {
    std::string msg;
    for (const Diagnostic& d : *diags) msg += format_diagnostic(d) + "\n";
    FAIL("formatted text failed to reparse:\n" << msg << "---\n" << text);
  }
  return std::get<SourceUnit>(std::move(result));
}

bool units_equal(const SourceUnit& a, const SourceUnit& b) {
  return a.items == b.items;  // paths and locations excluded by design
}

Condition cmp(CompareOp op, std::int64_t v) {
  CondCompare c;
  c.op = op;
  c.rhs.value = v;
  return Condition{c};
}

std::shared_ptr<Condition> box(Condition c) {
  return std::make_shared<Condition>(std::move(c));
}

TEST_CASE("renders comparisons") {
  CHECK(dsl::render_condition(cmp(CompareOp::kEq, 1)) == "out == 1");
  CHECK(dsl::render_condition(cmp(CompareOp::kGe, 10)) == "out >= 10");
  CondCompare sc;
  sc.op = CompareOp::kNe;
  sc.rhs.value = std::string("stop");
  CHECK(dsl::render_condition(Condition{sc}) == "out != \"stop\"");
}

TEST_CASE("renders boolean structure with minimal parentheses") {
  CondAnd a;
  a.lhs = box(cmp(CompareOp::kGt, 0));
  a.rhs = box(cmp(CompareOp::kLt, 9));
  CHECK(dsl::render_condition(Condition{a}) == "out > 0 and out < 9");

  CondOr o;
  o.lhs = box(Condition{a});
  o.rhs = box(cmp(CompareOp::kEq, 42));
  CHECK(dsl::render_condition(Condition{o}) ==
        "out > 0 and out < 9 or out == 42");

  // or under and needs parentheses
  CondAnd needs;
  needs.lhs = box(Condition{o});
  needs.rhs = box(cmp(CompareOp::kNe, 7));
  CHECK(dsl::render_condition(Condition{needs}) ==
        "(out > 0 and out < 9 or out == 42) and out != 7");

  CondNot n;
  n.operand = box(cmp(CompareOp::kEq, 1));
  CHECK(dsl::render_condition(Condition{n}) == "not out == 1");

  // not over a conjunction needs parentheses
  CondNot n2;
  n2.operand = box(Condition{a});
  CHECK(dsl::render_condition(Condition{n2}) == "not (out > 0 and out < 9)");

  // nested not round-trips through parentheses
  CondNot n3;
  n3.operand = box(Condition{n});
  CHECK(dsl::render_condition(Condition{n3}) == "not (not out == 1)");
}

TEST_CASE("right-nested trees keep their shape") {
  // a and (b and c) must not print as a and b and c (which re-parses
  // left-associated).
  CondAnd inner;
  inner.lhs = box(cmp(CompareOp::kEq, 2));
  inner.rhs = box(cmp(CompareOp::kEq, 3));
  CondAnd outer;
  outer.lhs = box(cmp(CompareOp::kEq, 1));
  outer.rhs = box(Condition{inner});
  std::string text = dsl::render_condition(Condition{outer});
  CHECK(text == "out == 1 and (out == 2 and out == 3)");
}

TEST_CASE("canonical layout of a small configuration") {
  SourceUnit unit = reparse(
      "Configuration   C on D {  Features {a,b;}\n"
      "GAProg P { Disable(b); Enable ( a ) ; }\n"
      "  Events{go;}\n"
      "}\n");
  std::string formatted = dsl::format_unit(unit);
  CHECK(formatted ==
        "Configuration C on D {\n"
        "  Features {\n"
        "    a, b;\n"
        "  }\n"
        "\n"
        "  Events {\n"
        "    go;\n"
        "  }\n"
        "\n"
        "  GAProg P {\n"
        "    Enable (a);\n"
        "    Disable (b);\n"
        "  }\n"
        "}\n");
}

TEST_CASE("canonical layout of a database") {
  SourceUnit unit = reparse("Database D{Feature a:state;Feature b:method;}");
  CHECK(dsl::format_unit(unit) ==
        "Database D {\n"
        "  Feature a : state;\n"
        "  Feature b : method;\n"
        "}\n");
}

TEST_CASE("items are separated by one blank line") {
  SourceUnit unit = reparse(
      "Database A { Feature x : data; }\n"
      "Database B { Feature y : data; }\n");
  std::string formatted = dsl::format_unit(unit);
  CHECK(formatted ==
        "Database A {\n"
        "  Feature x : data;\n"
        "}\n"
        "\n"
        "Database B {\n"
        "  Feature y : data;\n"
        "}\n");
}

TEST_CASE("corpus files round-trip and reach a fixpoint") {
  for (const auto& [path, text] : test::list_corpus_sources()) {
    CAPTURE(path);
    auto first = dsl::parse_unit(path, text);
    REQUIRE(std::holds_alternative<SourceUnit>(first));
    const SourceUnit& unit = std::get<SourceUnit>(first);

    std::string once = dsl::format_unit(unit);
    SourceUnit reparsed = reparse(once);
    CHECK(units_equal(unit, reparsed));

    // Idempotence: formatting the reparse of formatted text changes nothing.
    std::string twice = dsl::format_unit(reparsed);
    CHECK(once == twice);
  }
}

TEST_CASE("fixture files round-trip too") {
  for (const char* name :
       {"fixtures/conflict.gaf", "fixtures/broken_behavior.gaf"}) {
    std::string path = test::corpus_path(name);
    CAPTURE(path);
    auto first = dsl::parse_unit(path, test::read_file(path));
    REQUIRE(std::holds_alternative<SourceUnit>(first));
    const SourceUnit& unit = std::get<SourceUnit>(first);
    std::string once = dsl::format_unit(unit);
    CHECK(units_equal(unit, reparse(once)));
  }
}

TEST_CASE("random units round-trip") {
  test::UnitGenerator gen(20260816);
  for (int i = 0; i < 200; ++i) {
    SourceUnit unit = gen.random_unit();
    std::string text = dsl::format_unit(unit);
    CAPTURE(i);
    CAPTURE(text);
    SourceUnit reparsed = reparse(text);
    REQUIRE(units_equal(unit, reparsed));
    CHECK(dsl::format_unit(reparsed) == text);
  }
}

}  // namespace
}  // namespace gaf
