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

#ifndef GAF_VALUE_HPP_
#define GAF_VALUE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gaf {

/// A store value: integer, string, or ordered sequence of values. This is
/// the full set of value shapes instances persist and conditions see.
class Value {
 public:
  using Sequence = std::vector<Value>;
  enum class Kind { kInt, kString, kSequence };

  Value() : data_(std::int64_t{0}) {}
  Value(std::int64_t v) : data_(v) {}  // NOLINT(google-explicit-constructor)
  Value(int v) : data_(std::int64_t{v}) {}  // NOLINT
  Value(std::string v) : data_(std::move(v)) {}  // NOLINT
  Value(const char* v) : data_(std::string(v)) {}  // NOLINT
  Value(Sequence v) : data_(std::move(v)) {}  // NOLINT

  Kind kind() const { return static_cast<Kind>(data_.index()); }
  bool is_int() const { return kind() == Kind::kInt; }
  bool is_string() const { return kind() == Kind::kString; }
  bool is_sequence() const { return kind() == Kind::kSequence; }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  const std::string& as_string() const { return std::get<std::string>(data_); }
  const Sequence& as_sequence() const { return std::get<Sequence>(data_); }
  Sequence& as_sequence() { return std::get<Sequence>(data_); }

  /// Trace rendering: integers in decimal, strings raw, sequences as
  /// [v1,v2,...].
  std::string render() const;

  friend bool operator==(const Value& a, const Value& b) {
    return a.data_ == b.data_;
  }

 private:
  std::variant<std::int64_t, std::string, Sequence> data_;
};

/// Instance key-value store. std::map keeps keys in lexicographic order,
/// which SNAPSHOT records rely on.
using Store = std::map<std::string, Value>;

std::string render_store(const Store& store);

}  // namespace gaf

#endif  // GAF_VALUE_HPP_
