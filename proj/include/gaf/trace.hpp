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

#ifndef GAF_TRACE_HPP_
#define GAF_TRACE_HPP_

#include <string>
#include <vector>

namespace gaf::runtime {

// Append-only record log. Rendering is bit-exact: one line per record,
// each terminated by '\n'.
class Trace {
 public:
  void append(std::string line) { lines_.push_back(std::move(line)); }

  const std::vector<std::string>& lines() const { return lines_; }

  std::size_t size() const { return lines_.size(); }

  std::string render() const {
    std::string out;
    for (const std::string& line : lines_) {
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> lines_;
};

}  // namespace gaf::runtime

#endif  // GAF_TRACE_HPP_
