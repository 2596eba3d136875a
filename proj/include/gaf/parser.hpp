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

#ifndef GAF_PARSER_HPP_
#define GAF_PARSER_HPP_

#include <string>
#include <variant>
#include <vector>

#include "gaf/diagnostics.hpp"
#include "gaf/model.hpp"

namespace gaf::dsl {

// One parsed .gaf file: databases and configurations in declaration order.
struct SourceUnit {
  std::string path;
  std::vector<std::variant<SoftwareDatabase, SoftwareConfiguration>> items;
};

// Parses one file's text. On any lexical or syntax error the diagnostics
// alternative is returned (never an empty vector); recovery is per item, so
// one malformed definition does not hide errors in later ones.
std::variant<SourceUnit, std::vector<Diagnostic>> parse_unit(
    const std::string& path, const std::string& text);

}  // namespace gaf::dsl

#endif  // GAF_PARSER_HPP_
