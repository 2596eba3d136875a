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

#include "gaf/lexer.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace gaf::dsl {
namespace {

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string path, const std::string& text)
      : path_(std::move(path)), text_(text) {}

  LexResult run() {
    while (!at_end()) {
      skip_trivia();
      if (at_end()) break;
      lex_token();
    }
    emit(TokenKind::kEof, "", here());
    return {std::move(tokens_), std::move(diags_)};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char peek2() const {
    return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  SourceLoc here() const { return SourceLoc{path_, line_, column_}; }

  void emit(TokenKind kind, std::string text, SourceLoc loc,
            std::int64_t value = 0) {
    tokens_.push_back(Token{kind, std::move(text), value, std::move(loc)});
  }

  void skip_trivia() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek2() == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void lex_token() {
    SourceLoc loc = here();
    char c = peek();
    if (is_word_start(c)) {
      std::string word;
      while (!at_end() && is_word_char(peek())) {
        word.push_back(peek());
        advance();
      }
      emit(TokenKind::kWord, std::move(word), std::move(loc));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      lex_int(std::move(loc));
      return;
    }
    if (c == '"') {
      lex_string(std::move(loc));
      return;
    }
    switch (c) {
      case '{': advance(); emit(TokenKind::kLBrace, "{", loc); return;
      case '}': advance(); emit(TokenKind::kRBrace, "}", loc); return;
      case '(': advance(); emit(TokenKind::kLParen, "(", loc); return;
      case ')': advance(); emit(TokenKind::kRParen, ")", loc); return;
      case ',': advance(); emit(TokenKind::kComma, ",", loc); return;
      case ';': advance(); emit(TokenKind::kSemi, ";", loc); return;
      case ':': advance(); emit(TokenKind::kColon, ":", loc); return;
      case '-': advance(); emit(TokenKind::kDash, "-", loc); return;
      case '=':
        advance();
        if (!at_end() && peek() == '=') {
          advance();
          emit(TokenKind::kEq, "==", loc);
        } else {
          emit(TokenKind::kAssign, "=", loc);
        }
        return;
      case '!':
        advance();
        if (!at_end() && peek() == '=') {
          advance();
          emit(TokenKind::kNe, "!=", loc);
        } else {
          diags_.push_back(make_error(
              "bad-character", "stray '!' (did you mean '!='?)", loc));
        }
        return;
      case '<':
        advance();
        if (!at_end() && peek() == '=') {
          advance();
          emit(TokenKind::kLe, "<=", loc);
        } else {
          emit(TokenKind::kLt, "<", loc);
        }
        return;
      case '>':
        advance();
        if (!at_end() && peek() == '=') {
          advance();
          emit(TokenKind::kGe, ">=", loc);
        } else {
          emit(TokenKind::kGt, ">", loc);
        }
        return;
      default: {
        std::string shown = std::isprint(static_cast<unsigned char>(c))
                                ? std::string(1, c)
                                : "\\x" + [c] {
                                    static const char* hex = "0123456789abcdef";
                                    unsigned char u = static_cast<unsigned char>(c);
                                    std::string s;
                                    s.push_back(hex[u >> 4]);
                                    s.push_back(hex[u & 0xf]);
                                    return s;
                                  }();
        diags_.push_back(make_error(
            "bad-character", "unexpected character '" + shown + "'", loc));
        advance();
        return;
      }
    }
  }

  void lex_int(SourceLoc loc) {
    std::int64_t value = 0;
    bool overflow = false;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      int digit = peek() - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        overflow = true;
      } else {
        value = value * 10 + digit;
      }
      advance();
    }
    if (overflow) {
      diags_.push_back(
          make_error("syntax-error", "integer literal is too large", loc));
      value = 0;
    }
    emit(TokenKind::kInt, "", std::move(loc), value);
  }

  void lex_string(SourceLoc loc) {
    advance();  // opening quote
    std::string body;
    while (!at_end() && peek() != '"' && peek() != '\n') {
      body.push_back(peek());
      advance();
    }
    if (at_end() || peek() != '"') {
      diags_.push_back(
          make_error("unterminated-string", "unterminated string literal", loc));
      emit(TokenKind::kString, std::move(body), std::move(loc));
      return;
    }
    advance();  // closing quote
    emit(TokenKind::kString, std::move(body), std::move(loc));
  }

  std::string path_;
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::vector<Token> tokens_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

bool is_reserved_word(const std::string& word) {
  static const std::set<std::string> kReserved = {
      "Database",   "Feature",   "Configuration",
      "Features",   "Events",    "Relations",
      "Enable",     "Disable",   "Implies",
      "Excludes",   "GAProg",    "GAProc",
      "Behavior",   "Metamorphosis_Program",
      "Metamorphose", "Adaptation", "State",
      "At",         "Information",
      "on",         "to",        "the",
      "by",         "event",     "out",
      "and",        "or",        "not",
      "state",      "data",      "method",
      "adapter",    "transition", "ensured",
      "function",   "procedure",
  };
  return kReserved.count(word) > 0;
}

LexResult lex(const std::string& path, const std::string& text) {
  return Lexer(path, text).run();
}

}  // namespace gaf::dsl
