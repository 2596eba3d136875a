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

#include "gaf/linker.hpp"

namespace gaf {

const SoftwareDatabase* LinkedModel::find_database(
    const Identifier& name) const {
  for (const SoftwareDatabase& db : databases) {
    if (db.name == name) return &db;
  }
  return nullptr;
}

const SoftwareConfiguration* LinkedModel::find_configuration(
    const Identifier& name) const {
  for (const SoftwareConfiguration& cfg : configurations) {
    if (cfg.name == name) return &cfg;
  }
  return nullptr;
}

std::variant<LinkedModel, std::vector<Diagnostic>> link(
    const std::vector<dsl::SourceUnit>& units) {
  LinkedModel model;
  for (const dsl::SourceUnit& unit : units) {
    for (const auto& item : unit.items) {
      if (const auto* db = std::get_if<SoftwareDatabase>(&item)) {
        model.databases.push_back(*db);
      } else {
        model.configurations.push_back(std::get<SoftwareConfiguration>(item));
      }
    }
  }
  std::vector<Diagnostic> diags =
      validate_model(model.databases, model.configurations);
  if (has_errors(diags)) return diags;
  return model;
}

std::variant<LinkedModel, std::vector<Diagnostic>> analyze(
    const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<dsl::SourceUnit> units;
  std::vector<Diagnostic> diags;
  for (const auto& [path, text] : files) {
    auto parsed = dsl::parse_unit(path, text);
    if (auto* unit = std::get_if<dsl::SourceUnit>(&parsed)) {
      units.push_back(std::move(*unit));
    } else {
      const auto& file_diags = std::get<std::vector<Diagnostic>>(parsed);
      diags.insert(diags.end(), file_diags.begin(), file_diags.end());
    }
  }
  if (has_errors(diags)) return diags;
  return link(units);
}

}  // namespace gaf
