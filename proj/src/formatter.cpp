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

#include "gaf/formatter.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace gaf::dsl {
namespace {

// Precedence levels for parenthesization: or < and < not < atom.
int precedence(const Condition& cond) {
  if (std::holds_alternative<CondOr>(cond.node)) return 1;
  if (std::holds_alternative<CondAnd>(cond.node)) return 2;
  if (std::holds_alternative<CondNot>(cond.node)) return 3;
  return 4;
}

void render_cond(const Condition& cond, std::ostringstream& out);

void render_child(const Condition& child, int min_prec,
                  std::ostringstream& out) {
  if (precedence(child) < min_prec) {
    out << '(';
    render_cond(child, out);
    out << ')';
  } else {
    render_cond(child, out);
  }
}

void render_cond(const Condition& cond, std::ostringstream& out) {
  if (const auto* cmp = std::get_if<CondCompare>(&cond.node)) {
    out << "out " << to_string(cmp->op) << ' ';
    if (const auto* i = std::get_if<std::int64_t>(&cmp->rhs.value)) {
      out << *i;
    } else {
      out << '"' << std::get<std::string>(cmp->rhs.value) << '"';
    }
    return;
  }
  if (const auto* n = std::get_if<CondNot>(&cond.node)) {
    out << "not ";
    // `not` binds to a single atom; anything weaker needs parentheses.
    render_child(*n->operand, 4, out);
    return;
  }
  if (const auto* a = std::get_if<CondAnd>(&cond.node)) {
    render_child(*a->lhs, 2, out);
    out << " and ";
    render_child(*a->rhs, 3, out);
    return;
  }
  const auto& o = std::get<CondOr>(cond.node);
  render_child(*o.lhs, 1, out);
  out << " or ";
  render_child(*o.rhs, 2, out);
}

void join_identifiers(const std::vector<Identifier>& ids,
                      std::ostringstream& out) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out << ", ";
    out << ids[i];
  }
}

class Writer {
 public:
  std::string take() { return out_.str(); }

  void gap() { out_ << "\n"; }

  void write_database(const SoftwareDatabase& db) {
    out_ << "Database " << db.name << " {\n";
    for (const FeatureDecl& f : db.features) {
      out_ << "  Feature " << f.id << " : " << to_string(f.kind) << ";\n";
    }
    out_ << "}\n";
  }

  void write_configuration(const SoftwareConfiguration& cfg) {
    out_ << "Configuration " << cfg.name << " on " << cfg.database << " {\n";
    bool first = true;
    auto section_gap = [&] {
      if (!first) out_ << "\n";
      first = false;
    };
    if (!cfg.features.empty()) {
      section_gap();
      out_ << "  Features {\n    ";
      std::ostringstream list;
      join_identifiers(cfg.features, list);
      out_ << list.str() << ";\n  }\n";
    }
    if (!cfg.expected_events.empty()) {
      section_gap();
      out_ << "  Events {\n    ";
      std::ostringstream list;
      join_identifiers(cfg.expected_events, list);
      out_ << list.str() << ";\n  }\n";
    }
    if (!cfg.relations.relations.empty()) {
      section_gap();
      out_ << "  Relations {\n";
      for (const Relation& rel : cfg.relations.relations) {
        out_ << "    " << to_source(rel) << ";\n";
      }
      out_ << "  }\n";
    }
    for (const GAProg& prog : cfg.gaprogs) {
      section_gap();
      write_gaprog(prog);
    }
    for (const Behavior& beh : cfg.behaviors) {
      section_gap();
      write_behavior(beh);
    }
    for (const GAProc& proc : cfg.gaprocs) {
      section_gap();
      write_gaproc(proc);
    }
    for (const MetamorphosisProgram& meta : cfg.metamorphoses) {
      section_gap();
      write_metamorphosis(meta);
    }
    out_ << "}\n";
  }

 private:
  void write_gaprog(const GAProg& prog) {
    out_ << "  GAProg " << prog.id << " {\n";
    for (const std::vector<FeatureId>& clause : prog.enable_clauses) {
      out_ << "    Enable (";
      std::ostringstream list;
      join_identifiers(clause, list);
      out_ << list.str() << ");\n";
    }
    for (const std::vector<FeatureId>& clause : prog.disable_clauses) {
      out_ << "    Disable (";
      std::ostringstream list;
      join_identifiers(clause, list);
      out_ << list.str() << ");\n";
    }
    out_ << "  }\n";
  }

  void write_behavior(const Behavior& beh) {
    out_ << "  Behavior " << beh.id << " {\n";
    for (const BehaviorEdge& edge : beh.edges) {
      out_ << "    " << edge.from << " -";
      for (const Condition& guard : edge.guards) {
        out_ << " (" << render_condition(guard) << ")";
      }
      out_ << " " << edge.to << ";\n";
    }
    out_ << "  }\n";
  }

  void write_gaproc(const GAProc& proc) {
    out_ << "  GAProc " << proc.id << " {\n";
    for (const GAProcClause& clause : proc.clauses) {
      out_ << "    (event = " << clause.event << ") : " << clause.target;
      if (clause.behavior.has_value()) out_ << ", " << *clause.behavior;
      out_ << ";\n";
    }
    out_ << "  }\n";
  }

  void write_metamorphosis(const MetamorphosisProgram& meta) {
    out_ << "  Metamorphosis_Program " << meta.id << " {\n";
    out_ << "    Metamorphose to Configuration " << meta.target_configuration
         << ";\n";
    out_ << "    At the Adaptation State " << meta.from_state
         << " to the Adaptation State " << meta.to_state << ";\n";
    out_ << "    Information transition ensured by "
         << (meta.transition_kind == TransitionKind::kFunction ? "function"
                                                               : "procedure")
         << " " << meta.transition_fn << ";\n";
    out_ << "  }\n";
  }

  std::ostringstream out_;
};

}  // namespace

std::string render_condition(const Condition& cond) {
  std::ostringstream out;
  render_cond(cond, out);
  return out.str();
}

std::string format_unit(const SourceUnit& unit) {
  Writer writer;
  bool first = true;
  for (const auto& item : unit.items) {
    if (!first) writer.gap();
    first = false;
    if (const auto* db = std::get_if<SoftwareDatabase>(&item)) {
      writer.write_database(*db);
    } else {
      writer.write_configuration(std::get<SoftwareConfiguration>(item));
    }
  }
  return writer.take();
}

}  // namespace gaf::dsl
