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

#ifndef GAF_LINKER_HPP_
#define GAF_LINKER_HPP_

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gaf/diagnostics.hpp"
#include "gaf/model.hpp"
#include "gaf/parser.hpp"

namespace gaf {

// A validated model assembled from one or more parsed units. Definition
// order across units is preserved (unit order, then declaration order).
struct LinkedModel {
  std::vector<SoftwareDatabase> databases;
  std::vector<SoftwareConfiguration> configurations;

  const SoftwareDatabase* find_database(const Identifier& name) const;
  const SoftwareConfiguration* find_configuration(const Identifier& name) const;
};

// Validates cross-references over the given units and assembles the model.
// All validation diagnostics are collected; any error fails the link.
std::variant<LinkedModel, std::vector<Diagnostic>> link(
    const std::vector<dsl::SourceUnit>& units);

// Parses every (path, text) pair and links the results. Diagnostics from
// all files are collected before the link is abandoned, so one bad file
// does not mask errors in another.
std::variant<LinkedModel, std::vector<Diagnostic>> analyze(
    const std::vector<std::pair<std::string, std::string>>& files);

}  // namespace gaf

#endif  // GAF_LINKER_HPP_
