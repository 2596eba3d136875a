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

#include "gaf/value.hpp"

#include <sstream>

namespace gaf {

std::string Value::render() const {
  switch (kind()) {
    case Kind::kInt:
      return std::to_string(as_int());
    case Kind::kString:
      return as_string();
    case Kind::kSequence: {
      std::string out = "[";
      bool first = true;
      for (const Value& v : as_sequence()) {
        if (!first) out += ",";
        out += v.render();
        first = false;
      }
      out += "]";
      return out;
    }
  }
  return {};
}

std::string render_store(const Store& store) {
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : store) {
    if (!first) out += ",";
    out += key;
    out += "=";
    out += value.render();
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace gaf
