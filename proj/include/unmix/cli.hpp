#ifndef UNMIX_CLI_HPP
#define UNMIX_CLI_HPP

#include <istream>
#include <string>
#include <vector>

namespace unmix {

struct CliResult {
  int exit_code = 0;  // 0 ok, 1 failed --verify, 2 parse/usage error, 3 resource limit
  std::string out;
  std::string err;
};

/// Runs one invocation. `args` excludes the program name; `in` is read
/// when the input path is "-".
CliResult run_cli(const std::vector<std::string>& args, std::istream& in);

}  // namespace unmix

#endif  // UNMIX_CLI_HPP
