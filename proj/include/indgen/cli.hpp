#ifndef INDGEN_CLI_HPP
#define INDGEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace indgen {

enum ExitCode : int {
  kExitOk = 0,
  kExitParseError = 1,
  kExitCounterexample = 2,
  kExitBadFlags = 3,
};

// Command-line driver. `args` excludes the program name.
//
//   indgen [--format text|latex|sexpr] [--pointed] [--check] [--depth N]
//          [--samples N] [--seed N] [--output FILE] [FILE...]
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace indgen

#endif  // INDGEN_CLI_HPP
