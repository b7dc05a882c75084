#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "starhankel/series.hpp"

namespace starhankel::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kSuccess = 0,
  kDomainFailure = 1,
  kUsageError = 2,
};

/// Parses `re` or `re,im` in full double precision; throws std::invalid_argument.
Complex parse_complex(std::string_view text);

/// Parses a comma-separated list of reals; throws std::invalid_argument.
std::vector<double> parse_real_list(std::string_view text);

/// Runs one invocation. args[0] is the program name. Documents go to `out`,
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace starhankel::cli
