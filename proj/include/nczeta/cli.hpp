#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace nczeta {

// Knobs shared by the subcommands. Defaults are the documented CLI defaults.
struct RunConfig {
  int order = 10;
  bool prune = true;
  std::size_t lyndon_length = 6;
  unsigned deg_t = 8;
  unsigned deg_y = 3;
  std::size_t max_terms = 50'000'000;
  int oracle_max_length = 8;
  std::uint64_t max_enumeration_nodes = 500'000'000;
};

enum ExitCode : int {
  exit_ok = 0,
  exit_parse_error = 1,
  exit_validation_error = 2,
  exit_resource_error = 3,
};

// Runs one command line (args[0] is the program name). Data goes to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nczeta
