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

#ifndef GAF_FORMATTER_HPP_
#define GAF_FORMATTER_HPP_

#include <string>

#include "gaf/parser.hpp"

namespace gaf::dsl {

// Renders a parsed unit in canonical form: two-space indent, one statement
// per line, a blank line between definitions and sections, sections ordered
// Features / Events / Relations / GAProgs / Behaviors / GAProcs /
// Metamorphosis_Programs. Formatting is a pure function of the parsed
// model, so it is idempotent and parsing its output reproduces the model.
std::string format_unit(const SourceUnit& unit);

// Renders one guard condition without the surrounding parentheses, e.g.
// "out == 1 and not out > 5".
std::string render_condition(const Condition& cond);

}  // namespace gaf::dsl

#endif  // GAF_FORMATTER_HPP_
