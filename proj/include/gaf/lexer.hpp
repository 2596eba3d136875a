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

#ifndef GAF_LEXER_HPP_
#define GAF_LEXER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gaf/diagnostics.hpp"

namespace gaf::dsl {

enum class TokenKind {
  kWord,    // identifier or reserved word; text distinguishes them
  kInt,     // non-negative integer literal
  kString,  // double-quoted string literal; text excludes the quotes
  kLBrace,
  kRBrace,
  kLParen,
  kRParen,
  kComma,
  kSemi,
  kColon,
  kAssign,  // =
  kDash,    // -
  kEq,      // ==
  kNe,      // !=
  kLt,
  kLe,
  kGt,
  kGe,
  kEof,
};

struct Token {
  TokenKind kind = TokenKind::kEof;
  std::string text;       // words, string bodies
  std::int64_t value = 0;  // kInt only
  SourceLoc loc;
};

// True for words with grammatical meaning; these may not name user entities.
bool is_reserved_word(const std::string& word);

struct LexResult {
  std::vector<Token> tokens;  // always terminated by a kEof token
  std::vector<Diagnostic> diagnostics;
};

// Tokenizes `text`. `//` starts a line comment. Never throws; malformed
// input yields diagnostics (bad-character, unterminated-string,
// syntax-error) and lexing continues past the offending character.
LexResult lex(const std::string& path, const std::string& text);

}  // namespace gaf::dsl

#endif  // GAF_LEXER_HPP_
