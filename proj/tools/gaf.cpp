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

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#ifdef _WIN32
#include <io.h>
#define GAF_ISATTY _isatty
#define GAF_FILENO _fileno
#else
#include <unistd.h>
#define GAF_ISATTY isatty
#define GAF_FILENO fileno
#endif

#include "CLI11.hpp"
#include "gaf/coherence.hpp"
#include "gaf/formatter.hpp"
#include "gaf/linker.hpp"
#include "gaf/parser.hpp"
#include "gaf/registries.hpp"
#include "gaf/runtime.hpp"
#include "gaf/script.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // semantic or runtime failure
constexpr int kExitUsage = 2;    // usage or I/O error

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

void print_diagnostics(const std::vector<gaf::Diagnostic>& diags) {
  for (const gaf::Diagnostic& d : diags) {
    std::cerr << gaf::format_diagnostic(d) << "\n";
  }
}

// Reads and links the given .gaf files. On failure prints what went wrong
// and returns the exit code instead of a model.
std::variant<gaf::LinkedModel, int> load_model(
    const std::vector<std::string>& paths) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const std::string& path : paths) {
    std::optional<std::string> text = read_file(path);
    if (!text.has_value()) {
      std::cerr << "error: cannot read '" << path << "'\n";
      return kExitUsage;
    }
    files.emplace_back(path, std::move(*text));
  }
  auto result = gaf::analyze(files);
  if (auto* diags = std::get_if<std::vector<gaf::Diagnostic>>(&result)) {
    print_diagnostics(*diags);
    return kExitFailure;
  }
  return std::move(std::get<gaf::LinkedModel>(result));
}

int cmd_check(const std::vector<std::string>& paths) {
  auto loaded = load_model(paths);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  return kExitOk;
}

int cmd_run(const std::vector<std::string>& paths,
            const std::string& script_path,
            const std::optional<std::string>& trace_path,
            const std::optional<std::string>& stub_path) {
  auto loaded = load_model(paths);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  gaf::LinkedModel model = std::move(std::get<gaf::LinkedModel>(loaded));

  std::optional<std::string> script_text = read_file(script_path);
  if (!script_text.has_value()) {
    std::cerr << "error: cannot read '" << script_path << "'\n";
    return kExitUsage;
  }

  gaf::runtime::StubScript stubs;
  if (stub_path.has_value()) {
    std::optional<std::string> stub_text = read_file(*stub_path);
    if (!stub_text.has_value()) {
      std::cerr << "error: cannot read '" << *stub_path << "'\n";
      return kExitUsage;
    }
    auto parsed = gaf::runtime::parse_stub_script(*stub_path, *stub_text);
    if (auto* diags = std::get_if<std::vector<gaf::Diagnostic>>(&parsed)) {
      print_diagnostics(*diags);
      return kExitFailure;
    }
    stubs = std::move(std::get<gaf::runtime::StubScript>(parsed));
  }

  gaf::runtime::Engine engine(model,
                              gaf::runtime::FeatureRegistry::with_list_ops(),
                              gaf::runtime::TransitionRegistry::with_builtins(),
                              /*stub_mode=*/true, std::move(stubs));
  gaf::runtime::ScriptResult result =
      gaf::runtime::run_script(engine, *script_text);
  std::string rendered = engine.trace().render();
  if (trace_path.has_value()) {
    if (!write_file(*trace_path, rendered)) {
      std::cerr << "error: cannot write '" << *trace_path << "'\n";
      return kExitUsage;
    }
  } else {
    std::cout << rendered;
  }
  return result.exit_code == 0 ? kExitOk : kExitFailure;
}

int cmd_fmt(const std::string& path, bool to_stdout) {
  std::optional<std::string> text = read_file(path);
  if (!text.has_value()) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitUsage;
  }
  auto parsed = gaf::dsl::parse_unit(path, *text);
  if (auto* diags = std::get_if<std::vector<gaf::Diagnostic>>(&parsed)) {
    print_diagnostics(*diags);
    return kExitFailure;
  }
  std::string formatted =
      gaf::dsl::format_unit(std::get<gaf::dsl::SourceUnit>(parsed));
  if (to_stdout) {
    std::cout << formatted;
    return kExitOk;
  }
  if (!write_file(path, formatted)) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

int cmd_explain(const std::vector<std::string>& paths,
                const std::string& config, const std::string& gaprog) {
  auto loaded = load_model(paths);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  gaf::LinkedModel model = std::move(std::get<gaf::LinkedModel>(loaded));

  const gaf::SoftwareConfiguration* cfg = model.find_configuration(config);
  if (cfg == nullptr) {
    std::cerr << "error: unknown configuration '" << config << "'\n";
    return kExitUsage;
  }
  const gaf::GAProg* prog = cfg->find_gaprog(gaprog);
  if (prog == nullptr) {
    std::cerr << "error: configuration '" << config << "' has no GAProg '"
              << gaprog << "'\n";
    return kExitUsage;
  }

  auto [enabled_seed, disabled_seed] = gaf::coherence::seed_lists(*prog);
  auto result =
      gaf::coherence::propagate(enabled_seed, disabled_seed, cfg->relations);
  if (auto* err = std::get_if<gaf::coherence::CoherenceError>(&result)) {
    std::cerr << "error: " << err->describe() << "\n";
    return kExitFailure;
  }
  const gaf::coherence::Closure& closure =
      std::get<gaf::coherence::Closure>(result);
  for (const auto& [mode, feature] : closure.sequence) {
    std::cout << feature << ": "
              << (mode == gaf::ActionMode::kEnable ? "enabled" : "disabled")
              << " because "
              << gaf::coherence::render_chain(*closure.chain_for(feature))
              << "\n";
  }
  return kExitOk;
}

int cmd_repl(const std::vector<std::string>& paths, const std::string& config,
             const std::string& proc) {
  auto loaded = load_model(paths);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  gaf::LinkedModel model = std::move(std::get<gaf::LinkedModel>(loaded));

  const gaf::SoftwareConfiguration* cfg = model.find_configuration(config);
  if (cfg == nullptr) {
    std::cerr << "error: unknown configuration '" << config << "'\n";
    return kExitUsage;
  }
  if (cfg->find_gaproc(proc) == nullptr) {
    std::cerr << "error: configuration '" << config << "' has no GAProc '"
              << proc << "'\n";
    return kExitUsage;
  }

  gaf::runtime::Engine engine(model,
                              gaf::runtime::FeatureRegistry::with_list_ops(),
                              gaf::runtime::TransitionRegistry::with_builtins(),
                              /*stub_mode=*/true);
  gaf::runtime::ScriptSession session(engine);

  std::size_t printed = 0;
  auto flush_trace = [&] {
    const auto& lines = engine.trace().lines();
    for (; printed < lines.size(); ++printed) {
      std::cout << lines[printed] << "\n";
    }
    std::cout.flush();
  };

  auto created = engine.create_instance("repl", cfg->database, cfg->name, proc);
  flush_trace();
  if (std::holds_alternative<gaf::runtime::OpError>(created)) {
    return kExitFailure;
  }
  session.instance() =
      std::move(std::get<gaf::SoftwareInstance>(created));

  const bool interactive = GAF_ISATTY(GAF_FILENO(stdin)) != 0;
  std::string line;
  int line_no = 0;
  while (true) {
    if (interactive) {
      std::cout << "gaf> ";
      std::cout.flush();
    }
    if (!std::getline(std::cin, line)) break;
    ++line_no;
    std::string trimmed = line;
    // `state` and `quit` exist only in the REPL; everything else is script.
    std::istringstream head(trimmed);
    std::string word;
    head >> word;
    if (word == "quit") break;
    if (word == "state") {
      session.engine().snapshot(*session.instance());
    } else {
      session.execute_line(line, line_no);
    }
    flush_trace();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genetic adaptation framework tools"};
  app.require_subcommand(1);

  std::vector<std::string> check_files;
  CLI::App* check = app.add_subcommand("check", "Validate .gaf files");
  check->add_option("files", check_files, "Input .gaf files")
      ->required()
      ->expected(-1);

  std::vector<std::string> run_files;
  std::string run_script_path;
  std::string run_trace_path;
  std::string run_stub_path;
  CLI::App* run = app.add_subcommand("run", "Run an event script");
  run->add_option("files", run_files, "Input .gaf files")
      ->required()
      ->expected(-1);
  run->add_option("--script", run_script_path, "Event script path")
      ->required();
  run->add_option("--trace", run_trace_path,
                  "Write the trace to this file instead of stdout");
  run->add_option("--stub", run_stub_path, "Stub-output script path");

  std::string fmt_file;
  bool fmt_stdout = false;
  CLI::App* fmt = app.add_subcommand("fmt", "Reformat a .gaf file");
  fmt->add_option("file", fmt_file, "File to format")->required();
  fmt->add_flag("--stdout", fmt_stdout,
                "Print the formatted text instead of rewriting the file");

  std::vector<std::string> explain_files;
  std::string explain_config;
  std::string explain_gaprog;
  CLI::App* explain =
      app.add_subcommand("explain", "Explain a GAProg's closure");
  explain->add_option("files", explain_files, "Input .gaf files")
      ->required()
      ->expected(-1);
  explain->add_option("--config", explain_config, "Configuration name")
      ->required();
  explain->add_option("--gaprog", explain_gaprog, "GAProg id")->required();

  std::vector<std::string> repl_files;
  std::string repl_config;
  std::string repl_proc;
  CLI::App* repl = app.add_subcommand("repl", "Interactive session");
  repl->add_option("files", repl_files, "Input .gaf files")
      ->required()
      ->expected(-1);
  repl->add_option("--config", repl_config, "Configuration name")->required();
  repl->add_option("--proc", repl_proc, "GAProc name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Fold every usage problem into exit 2; --help and friends exit 0.
    if (e.get_exit_code() != 0) {
      std::cerr << e.what() << "\n";
      return kExitUsage;
    }
    return app.exit(e);
  }

  if (check->parsed()) return cmd_check(check_files);
  if (run->parsed()) {
    std::optional<std::string> trace_path;
    if (!run_trace_path.empty()) trace_path = run_trace_path;
    std::optional<std::string> stub_path;
    if (!run_stub_path.empty()) stub_path = run_stub_path;
    return cmd_run(run_files, run_script_path, trace_path, stub_path);
  }
  if (fmt->parsed()) return cmd_fmt(fmt_file, fmt_stdout);
  if (explain->parsed()) return cmd_explain(explain_files, explain_config,
                                            explain_gaprog);
  if (repl->parsed()) return cmd_repl(repl_files, repl_config, repl_proc);
  return kExitUsage;
}
