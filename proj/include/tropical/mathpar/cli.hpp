#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "tropical/mathpar/session.hpp"

namespace tropical::mathpar {

enum ExitCode : int { kExitOk = 0, kExitScriptError = 1, kExitIoError = 2 };

namespace detail {

inline int run_script(const std::string& source, const RenderOptions& options, bool trace_ops, std::ostream& out,
                      std::ostream& err) {
  Session session(options);
  std::size_t printed = 0;
  auto flush = [&] {
    for (; printed < session.output().size(); ++printed) {
      const OutputLine& line = session.output()[printed];
      out << line.text << '\n';
      if (trace_ops) {
        err << "ops (line " << line.line << "): add=" << line.ops.add << " mul=" << line.ops.mul
            << " neg=" << line.ops.neg << '\n';
      }
    }
  };
  try {
    for (const auto& stmt : parse(source)) {
      session.execute(stmt);
      flush();
    }
  } catch (const ScriptError& e) {
    flush();
    err << "error: " << e.what() << '\n';
    return kExitScriptError;
  }
  return kExitOk;
}

}  // namespace detail

/// Entry point of the `mathpar` tool:
///   mathpar run <file>     execute a script file
///   mathpar eval "<code>"  execute inline code
///   mathpar                read a script from stdin
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interpreter for Mathpar scripts over tropical and rational algebras", "mathpar"};
  std::string format = "plain";
  bool show_objective = false;
  bool trace_ops = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "latex"}));
  app.add_flag("--show-objective", show_objective, "Print the optimal objective after simplex results");
  app.add_flag("--trace-ops", trace_ops, "Print semiring operation counts per result to stderr");

  std::string path;
  auto* run = app.add_subcommand("run", "Execute a script file");
  run->add_option("file", path, "Script path")->required();
  std::string code;
  auto* eval = app.add_subcommand("eval", "Execute inline code");
  eval->add_option("code", code, "Script text")->required();
  app.require_subcommand(0, 1);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }

  RenderOptions options;
  options.format = format == "latex" ? Format::Latex : Format::Plain;
  options.show_objective = show_objective;

  std::string source;
  if (*run) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      err << "error: cannot read '" << path << "'\n";
      return kExitIoError;
    }
    source.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  } else if (*eval) {
    source = code;
  } else {
    source.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    if (in.bad()) {
      err << "error: failed reading standard input\n";
      return kExitIoError;
    }
  }
  return detail::run_script(source, options, trace_ops, out, err);
}

}  // namespace tropical::mathpar
