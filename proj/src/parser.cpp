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

#include "gaf/parser.hpp"

#include <memory>
#include <utility>

#include "gaf/lexer.hpp"

namespace gaf::dsl {
namespace {

// Thrown on an unrecoverable token mismatch; caught at item boundaries.
struct ParsePanic {};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::pair<std::vector<std::variant<SoftwareDatabase, SoftwareConfiguration>>,
            std::vector<Diagnostic>>
  run() {
    while (!at(TokenKind::kEof)) {
      try {
        if (at_word("Database")) {
          items_.emplace_back(parse_database());
        } else if (at_word("Configuration")) {
          items_.emplace_back(parse_configuration());
        } else {
          error("expected 'Database' or 'Configuration', got " +
                describe(peek()));
          throw ParsePanic{};
        }
      } catch (const ParsePanic&) {
        recover_to_next_item();
      }
    }
    return {std::move(items_), std::move(diags_)};
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool at(TokenKind kind) const { return peek().kind == kind; }

  bool at_word(const char* word) const {
    return peek().kind == TokenKind::kWord && peek().text == word;
  }

  const Token& advance() { return tokens_[pos_++]; }

  bool eat(TokenKind kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  bool eat_word(const char* word) {
    if (!at_word(word)) return false;
    ++pos_;
    return true;
  }

  void error(const std::string& message) {
    diags_.push_back(make_error("syntax-error", message, peek().loc));
  }

  [[noreturn]] void fail(const std::string& message) {
    error(message);
    throw ParsePanic{};
  }

  static std::string describe(const Token& tok) {
    switch (tok.kind) {
      case TokenKind::kWord: return "'" + tok.text + "'";
      case TokenKind::kInt: return "integer literal";
      case TokenKind::kString: return "string literal";
      case TokenKind::kEof: return "end of file";
      default: return "'" + tok.text + "'";
    }
  }

  Token expect(TokenKind kind, const char* what) {
    if (!at(kind)) fail(std::string("expected ") + what + ", got " + describe(peek()));
    return advance();
  }

  void expect_word(const char* word) {
    if (!at_word(word))
      fail("expected '" + std::string(word) + "', got " + describe(peek()));
    ++pos_;
  }

  Identifier expect_identifier(const char* what) {
    if (!at(TokenKind::kWord))
      fail(std::string("expected ") + what + ", got " + describe(peek()));
    if (is_reserved_word(peek().text))
      fail("reserved word '" + peek().text + "' cannot be used as " + what);
    return advance().text;
  }

  // After a failed item, skip to the next top-level definition. Brace depth
  // is tracked from the panic point; the enclosing '}' is consumed.
  void recover_to_next_item() {
    int depth = 0;
    while (!at(TokenKind::kEof)) {
      if (depth <= 0 && (at_word("Database") || at_word("Configuration")))
        return;
      if (at(TokenKind::kLBrace)) {
        ++depth;
      } else if (at(TokenKind::kRBrace)) {
        if (depth == 0) {
          advance();
          return;
        }
        --depth;
      }
      advance();
    }
  }

  SoftwareDatabase parse_database() {
    SoftwareDatabase db;
    db.loc = peek().loc;
    expect_word("Database");
    db.name = expect_identifier("a database name");
    expect(TokenKind::kLBrace, "'{'");
    while (!at(TokenKind::kRBrace)) {
      FeatureDecl decl;
      decl.loc = peek().loc;
      expect_word("Feature");
      decl.id = expect_identifier("a feature name");
      expect(TokenKind::kColon, "':'");
      if (eat_word("state")) {
        decl.kind = FeatureKind::kState;
      } else if (eat_word("data")) {
        decl.kind = FeatureKind::kData;
      } else if (eat_word("method")) {
        decl.kind = FeatureKind::kMethod;
      } else if (eat_word("adapter")) {
        decl.kind = FeatureKind::kAdapter;
      } else {
        fail("expected 'state', 'data', 'method' or 'adapter', got " +
             describe(peek()));
      }
      expect(TokenKind::kSemi, "';'");
      db.features.push_back(std::move(decl));
    }
    expect(TokenKind::kRBrace, "'}'");
    return db;
  }

  SoftwareConfiguration parse_configuration() {
    SoftwareConfiguration cfg;
    cfg.loc = peek().loc;
    expect_word("Configuration");
    cfg.name = expect_identifier("a configuration name");
    expect_word("on");
    cfg.database = expect_identifier("a database name");
    expect(TokenKind::kLBrace, "'{'");
    while (!at(TokenKind::kRBrace)) {
      if (at_word("Features")) {
        parse_features_section(cfg);
      } else if (at_word("Events")) {
        parse_events_section(cfg);
      } else if (at_word("Relations")) {
        parse_relations_section(cfg);
      } else if (at_word("GAProg")) {
        cfg.gaprogs.push_back(parse_gaprog());
      } else if (at_word("Behavior")) {
        cfg.behaviors.push_back(parse_behavior());
      } else if (at_word("GAProc")) {
        cfg.gaprocs.push_back(parse_gaproc());
      } else if (at_word("Metamorphosis_Program")) {
        cfg.metamorphoses.push_back(parse_metamorphosis());
      } else {
        fail("expected a configuration section, got " + describe(peek()));
      }
    }
    expect(TokenKind::kRBrace, "'}'");
    return cfg;
  }

  void parse_features_section(SoftwareConfiguration& cfg) {
    expect_word("Features");
    expect(TokenKind::kLBrace, "'{'");
    cfg.features.push_back(expect_identifier("a feature name"));
    while (eat(TokenKind::kComma))
      cfg.features.push_back(expect_identifier("a feature name"));
    expect(TokenKind::kSemi, "';'");
    expect(TokenKind::kRBrace, "'}'");
  }

  void parse_events_section(SoftwareConfiguration& cfg) {
    expect_word("Events");
    expect(TokenKind::kLBrace, "'{'");
    cfg.expected_events.push_back(expect_identifier("an event name"));
    while (eat(TokenKind::kComma))
      cfg.expected_events.push_back(expect_identifier("an event name"));
    expect(TokenKind::kSemi, "';'");
    expect(TokenKind::kRBrace, "'}'");
  }

  ActionMode parse_mode() {
    if (eat_word("Enable")) return ActionMode::kEnable;
    if (eat_word("Disable")) return ActionMode::kDisable;
    fail("expected 'Enable' or 'Disable', got " + describe(peek()));
  }

  void parse_relations_section(SoftwareConfiguration& cfg) {
    expect_word("Relations");
    expect(TokenKind::kLBrace, "'{'");
    while (!at(TokenKind::kRBrace)) {
      Relation rel;
      rel.loc = peek().loc;
      rel.trigger_mode = parse_mode();
      expect(TokenKind::kLParen, "'('");
      rel.trigger = expect_identifier("a feature name");
      expect(TokenKind::kRParen, "')'");
      if (eat_word("Implies")) {
        rel.verb = RelationVerb::kImplies;
      } else if (eat_word("Excludes")) {
        rel.verb = RelationVerb::kExcludes;
      } else {
        fail("expected 'Implies' or 'Excludes', got " + describe(peek()));
      }
      rel.target_mode = parse_mode();
      expect(TokenKind::kLParen, "'('");
      rel.target = expect_identifier("a feature name");
      expect(TokenKind::kRParen, "')'");
      expect(TokenKind::kSemi, "';'");
      cfg.relations.relations.push_back(std::move(rel));
    }
    expect(TokenKind::kRBrace, "'}'");
  }

  GAProg parse_gaprog() {
    GAProg prog;
    prog.loc = peek().loc;
    expect_word("GAProg");
    prog.id = expect_identifier("a GAProg name");
    expect(TokenKind::kLBrace, "'{'");
    while (!at(TokenKind::kRBrace)) {
      ActionMode mode = parse_mode();
      expect(TokenKind::kLParen, "'('");
      std::vector<FeatureId> features;
      features.push_back(expect_identifier("a feature name"));
      while (eat(TokenKind::kComma))
        features.push_back(expect_identifier("a feature name"));
      expect(TokenKind::kRParen, "')'");
      expect(TokenKind::kSemi, "';'");
      if (mode == ActionMode::kEnable) {
        prog.enable_clauses.push_back(std::move(features));
      } else {
        prog.disable_clauses.push_back(std::move(features));
      }
    }
    expect(TokenKind::kRBrace, "'}'");
    return prog;
  }

  GAProc parse_gaproc() {
    GAProc proc;
    proc.loc = peek().loc;
    expect_word("GAProc");
    proc.id = expect_identifier("a GAProc name");
    expect(TokenKind::kLBrace, "'{'");
    do {
      GAProcClause clause;
      clause.loc = peek().loc;
      expect(TokenKind::kLParen, "'('");
      expect_word("event");
      expect(TokenKind::kAssign, "'='");
      clause.event = expect_identifier("an event name");
      expect(TokenKind::kRParen, "')'");
      expect(TokenKind::kColon, "':'");
      clause.target = expect_identifier("a target name");
      if (eat(TokenKind::kComma))
        clause.behavior = expect_identifier("a behavior name");
      expect(TokenKind::kSemi, "';'");
      proc.clauses.push_back(std::move(clause));
    } while (!at(TokenKind::kRBrace));
    expect(TokenKind::kRBrace, "'}'");
    return proc;
  }

  Behavior parse_behavior() {
    Behavior beh;
    beh.loc = peek().loc;
    expect_word("Behavior");
    beh.id = expect_identifier("a behavior name");
    expect(TokenKind::kLBrace, "'{'");
    do {
      BehaviorEdge edge;
      edge.loc = peek().loc;
      edge.from = expect_identifier("a feature name");
      expect(TokenKind::kDash, "'-'");
      while (at(TokenKind::kLParen)) {
        expect(TokenKind::kLParen, "'('");
        edge.guards.push_back(parse_condition());
        expect(TokenKind::kRParen, "')'");
      }
      edge.to = expect_identifier("a feature name");
      expect(TokenKind::kSemi, "';'");
      beh.edges.push_back(std::move(edge));
    } while (!at(TokenKind::kRBrace));
    expect(TokenKind::kRBrace, "'}'");
    return beh;
  }

  Condition parse_condition() { return parse_or(); }

  Condition parse_or() {
    Condition lhs = parse_and();
    while (eat_word("or")) {
      Condition rhs = parse_and();
      CondOr node;
      node.lhs = std::make_shared<Condition>(std::move(lhs));
      node.rhs = std::make_shared<Condition>(std::move(rhs));
      lhs = Condition{std::move(node)};
    }
    return lhs;
  }

  Condition parse_and() {
    Condition lhs = parse_not();
    while (eat_word("and")) {
      Condition rhs = parse_not();
      CondAnd node;
      node.lhs = std::make_shared<Condition>(std::move(lhs));
      node.rhs = std::make_shared<Condition>(std::move(rhs));
      lhs = Condition{std::move(node)};
    }
    return lhs;
  }

  Condition parse_not() {
    if (eat_word("not")) {
      CondNot node;
      node.operand = std::make_shared<Condition>(parse_atom());
      return Condition{std::move(node)};
    }
    return parse_atom();
  }

  Condition parse_atom() {
    if (eat_word("out")) {
      CondCompare cmp;
      if (eat(TokenKind::kEq)) {
        cmp.op = CompareOp::kEq;
      } else if (eat(TokenKind::kNe)) {
        cmp.op = CompareOp::kNe;
      } else if (eat(TokenKind::kLt)) {
        cmp.op = CompareOp::kLt;
      } else if (eat(TokenKind::kLe)) {
        cmp.op = CompareOp::kLe;
      } else if (eat(TokenKind::kGt)) {
        cmp.op = CompareOp::kGt;
      } else if (eat(TokenKind::kGe)) {
        cmp.op = CompareOp::kGe;
      } else {
        fail("expected a comparison operator, got " + describe(peek()));
      }
      if (at(TokenKind::kInt)) {
        cmp.rhs = ConditionLiteral{advance().value};
      } else if (at(TokenKind::kString)) {
        cmp.rhs = ConditionLiteral{advance().text};
      } else {
        fail("expected an integer or string literal, got " + describe(peek()));
      }
      return Condition{std::move(cmp)};
    }
    if (eat(TokenKind::kLParen)) {
      Condition inner = parse_condition();
      expect(TokenKind::kRParen, "')'");
      return inner;
    }
    fail("expected 'out' or '(', got " + describe(peek()));
  }

  MetamorphosisProgram parse_metamorphosis() {
    MetamorphosisProgram meta;
    meta.loc = peek().loc;
    expect_word("Metamorphosis_Program");
    meta.id = expect_identifier("a metamorphosis program name");
    expect(TokenKind::kLBrace, "'{'");
    expect_word("Metamorphose");
    expect_word("to");
    expect_word("Configuration");
    meta.target_configuration = expect_identifier("a configuration name");
    expect(TokenKind::kSemi, "';'");
    expect_word("At");
    expect_word("the");
    expect_word("Adaptation");
    expect_word("State");
    meta.from_state = expect_identifier("a state name");
    expect_word("to");
    expect_word("the");
    expect_word("Adaptation");
    expect_word("State");
    meta.to_state = expect_identifier("a state name");
    expect(TokenKind::kSemi, "';'");
    expect_word("Information");
    expect_word("transition");
    expect_word("ensured");
    expect_word("by");
    if (eat_word("function")) {
      meta.transition_kind = TransitionKind::kFunction;
    } else if (eat_word("procedure")) {
      meta.transition_kind = TransitionKind::kProcedure;
    } else {
      fail("expected 'function' or 'procedure', got " + describe(peek()));
    }
    meta.transition_fn = expect_identifier("a transition name");
    expect(TokenKind::kSemi, "';'");
    expect(TokenKind::kRBrace, "'}'");
    return meta;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<std::variant<SoftwareDatabase, SoftwareConfiguration>> items_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

std::variant<SourceUnit, std::vector<Diagnostic>> parse_unit(
    const std::string& path, const std::string& text) {
  LexResult lexed = lex(path, text);
  std::vector<Diagnostic> diags = std::move(lexed.diagnostics);
  auto [items, parse_diags] = Parser(std::move(lexed.tokens)).run();
  diags.insert(diags.end(), parse_diags.begin(), parse_diags.end());
  if (has_errors(diags)) return diags;
  SourceUnit unit;
  unit.path = path;
  unit.items = std::move(items);
  return unit;
}

}  // namespace gaf::dsl
