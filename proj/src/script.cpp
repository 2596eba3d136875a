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

#include "gaf/script.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace gaf::runtime {
namespace {

struct ScriptToken {
  enum class Kind { kWord, kInt, kString, kEquals } kind;
  std::string text;
  std::int64_t value = 0;
};

// Tokenizes one script line; returns nullopt with `error` set on failure.
std::optional<std::vector<ScriptToken>> tokenize_line(const std::string& line,
                                                      std::string& error) {
  std::vector<ScriptToken> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '"') {
      std::size_t end = line.find('"', i + 1);
      if (end == std::string::npos) {
        error = "unterminated string";
        return std::nullopt;
      }
      tokens.push_back({ScriptToken::Kind::kString,
                        line.substr(i + 1, end - i - 1), 0});
      i = end + 1;
      continue;
    }
    if (c == '=') {
      tokens.push_back({ScriptToken::Kind::kEquals, "=", 0});
      ++i;
      continue;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      if (c == '-') ++i;
      std::size_t digits = 0;
      while (i < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[i]))) {
        ++i;
        ++digits;
      }
      if (digits == 0) {
        error = "expected digits after '-'";
        return std::nullopt;
      }
      std::string text = line.substr(start, i - start);
      try {
        tokens.push_back({ScriptToken::Kind::kInt, text,
                          static_cast<std::int64_t>(std::stoll(text))});
      } catch (const std::exception&) {
        error = "integer '" + text + "' out of range";
        return std::nullopt;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) ||
              line[i] == '_')) {
        ++i;
      }
      tokens.push_back(
          {ScriptToken::Kind::kWord, line.substr(start, i - start), 0});
      continue;
    }
    error = std::string("unexpected character '") + c + "'";
    return std::nullopt;
  }
  return tokens;
}

void strip_comment(std::string& line) {
  bool in_string = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_string = !in_string;
    if (line[i] == '#' && !in_string) {
      line.erase(i);
      return;
    }
  }
}

bool is_word(const std::vector<ScriptToken>& tokens, std::size_t i) {
  return i < tokens.size() && tokens[i].kind == ScriptToken::Kind::kWord;
}

std::optional<Value> literal_value(const std::vector<ScriptToken>& tokens,
                                   std::size_t i) {
  if (i >= tokens.size()) return std::nullopt;
  if (tokens[i].kind == ScriptToken::Kind::kInt) return Value(tokens[i].value);
  if (tokens[i].kind == ScriptToken::Kind::kString)
    return Value(tokens[i].text);
  return std::nullopt;
}

// Emits the script-error record; always "fails" the line.
bool command_error(ScriptSession& session, int line_no,
                   const std::string& detail) {
  std::ostringstream msg;
  msg << "ERROR script-error line " << line_no << ": " << detail;
  session.engine().trace().append(msg.str());
  return false;
}

bool cmd_create(ScriptSession& session, int line_no,
                const std::vector<ScriptToken>& tokens) {
  if (session.instance().has_value()) {
    return command_error(session, line_no, "an instance was already created");
  }
  if (tokens.size() != 5 || !is_word(tokens, 1) || !is_word(tokens, 2) ||
      !is_word(tokens, 3) || !is_word(tokens, 4)) {
    return command_error(
        session, line_no,
        "usage: create <instance> <database> <configuration> <gaproc>");
  }
  auto result = session.engine().create_instance(
      tokens[1].text, tokens[2].text, tokens[3].text, tokens[4].text);
  if (std::holds_alternative<OpError>(result)) return false;
  session.instance() = std::move(std::get<SoftwareInstance>(result));
  return true;
}

bool cmd_event(ScriptSession& session, int line_no,
               const std::vector<ScriptToken>& tokens) {
  if (tokens.size() != 2 || !is_word(tokens, 1)) {
    return command_error(session, line_no, "usage: event <name>");
  }
  AdaptationOutcome outcome =
      session.engine().dispatch_event(*session.instance(), tokens[1].text);
  return !std::holds_alternative<Failed>(outcome);
}

bool cmd_behave(ScriptSession& session, int line_no,
                const std::vector<ScriptToken>& tokens) {
  if (tokens.size() != 1) return command_error(session, line_no, "usage: behave");
  return !session.engine().execute_behavior(*session.instance()).has_value();
}

bool cmd_invoke(ScriptSession& session, int line_no,
                const std::vector<ScriptToken>& tokens) {
  if (tokens.size() < 2 || tokens.size() > 3 || !is_word(tokens, 1)) {
    return command_error(session, line_no,
                         "usage: invoke <feature> [<integer>|\"<string>\"]");
  }
  std::optional<Value> input;
  if (tokens.size() == 3) {
    input = literal_value(tokens, 2);
    if (!input.has_value()) {
      return command_error(session, line_no,
                           "invoke input must be an integer or a string");
    }
  }
  auto result = session.engine().invoke_feature(*session.instance(),
                                                tokens[1].text, input);
  return !std::holds_alternative<OpError>(result);
}

bool cmd_store(ScriptSession& session, int line_no,
               const std::vector<ScriptToken>& tokens) {
  if (tokens.size() != 4 || !is_word(tokens, 1) ||
      tokens[2].kind != ScriptToken::Kind::kEquals) {
    return command_error(session, line_no,
                         "usage: store <key> = <integer>|\"<string>\"");
  }
  std::optional<Value> value = literal_value(tokens, 3);
  if (!value.has_value()) {
    return command_error(session, line_no,
                         "store value must be an integer or a string");
  }
  session.instance()->store[tokens[1].text] = std::move(*value);
  return true;
}

bool cmd_dump(ScriptSession& session, int line_no,
              const std::vector<ScriptToken>& tokens) {
  if (tokens.size() != 1) return command_error(session, line_no, "usage: dump");
  session.engine().snapshot(*session.instance());
  return true;
}

}  // namespace

bool ScriptSession::execute_line(const std::string& raw_line, int line_no) {
  std::string line = raw_line;
  strip_comment(line);
  std::string error;
  auto tokens = tokenize_line(line, error);
  if (!tokens.has_value()) return command_error(*this, line_no, error);
  if (tokens->empty()) return true;
  if ((*tokens)[0].kind != ScriptToken::Kind::kWord) {
    return command_error(*this, line_no, "expected a command word");
  }
  const std::string& cmd = (*tokens)[0].text;
  if (cmd == "create") return cmd_create(*this, line_no, *tokens);
  if (!instance_.has_value()) {
    return command_error(*this, line_no,
                         "'" + cmd + "' before any instance was created");
  }
  if (cmd == "event") return cmd_event(*this, line_no, *tokens);
  if (cmd == "behave") return cmd_behave(*this, line_no, *tokens);
  if (cmd == "invoke") return cmd_invoke(*this, line_no, *tokens);
  if (cmd == "store") return cmd_store(*this, line_no, *tokens);
  if (cmd == "dump") return cmd_dump(*this, line_no, *tokens);
  return command_error(*this, line_no, "unknown command '" + cmd + "'");
}

ScriptResult run_script(Engine& engine, const std::string& script_text) {
  ScriptSession session(engine);
  std::istringstream in(script_text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!session.execute_line(raw, line_no)) {
      return ScriptResult{1, std::move(session.instance())};
    }
  }
  return ScriptResult{0, std::move(session.instance())};
}

}  // namespace gaf::runtime
