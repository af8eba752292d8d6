// triorth: triorthogonality checks and triorthogonal-code analysis from the command line.
//
//   triorth check FILE
//   triorth analyze FILE [--exact-distance] [--budget N] [--search-limit N]
//   triorth extend FILE (--vector BITS | --auto)
//   triorth enumerate --n N [--report census|full]
//
// All commands accept --output text|machine.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "triorth/commands.hpp"

namespace {

using triorth::cli::EnumerationMode;
using triorth::cli::OutputFormat;

void add_common(CLI::App* cmd, triorth::cli::Options& opt) {
  const std::map<std::string, OutputFormat> formats{{"text", OutputFormat::text}, {"machine", OutputFormat::machine}};
  cmd->add_option("--output", opt.output, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  cmd->add_option("--budget", opt.distance_budget, "Maximum number of codewords enumerated for a distance")
      ->default_val(opt.distance_budget);
  cmd->add_option("--search-limit", opt.search_limit, "Maximum backtracking nodes when deciding triorthogonality")
      ->default_val(opt.search_limit);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triorthogonal binary codes: checks, analysis, extension, and enumeration"};
  app.require_subcommand(1);

  triorth::cli::Options opt;
  std::string path;
  std::optional<std::string> vector;
  bool automatic = false;
  std::size_t length = 0;
  EnumerationMode mode = EnumerationMode::census;

  auto* check = app.add_subcommand("check", "Test whether a matrix is triorthogonal as given");
  check->add_option("file", path, "Matrix file")->required();
  add_common(check, opt);

  auto* analyze = app.add_subcommand("analyze", "Analyze the code generated by a matrix");
  analyze->add_option("file", path, "Matrix file")->required();
  analyze->add_flag("--exact-distance", opt.exact_distance, "Report the exact distance of the bounding code");
  add_common(analyze, opt);

  auto* extend = app.add_subcommand("extend", "Extend a triorthogonal code by admissible vectors");
  extend->add_option("file", path, "Matrix file")->required();
  auto* vec_opt = extend->add_option("--vector", vector, "Vector to add, as a 0/1 string");
  extend->add_flag("--auto", automatic, "Saturate to a maximal code")->excludes(vec_opt);
  extend->add_flag("--exact-distance", opt.exact_distance, "Report the exact distance of the bounding code");
  add_common(extend, opt);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all triorthogonal codes of a length");
  enumerate->add_option("--n", length, "Code length (1..7)")->required();
  const std::map<std::string, EnumerationMode> modes{{"census", EnumerationMode::census},
                                                     {"full", EnumerationMode::full}};
  enumerate->add_option("--report", mode, "census or full")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case))
      ->default_str("census");
  add_common(enumerate, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : triorth::cli::exit_input_error;
  }

  if (check->parsed()) return triorth::cli::run_check(path, opt, std::cout);
  if (analyze->parsed()) return triorth::cli::run_analyze(path, opt, std::cout);
  if (extend->parsed()) return triorth::cli::run_extend(path, vector, automatic, opt, std::cout);
  return triorth::cli::run_enumerate(length, mode, opt, std::cout);
}
