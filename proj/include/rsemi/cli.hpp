#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsemi {

  /// Runs one command, e.g. {"validate", "y2.rsg"}. Returns 0 on success,
  /// 1 when the input is rejected or a check fails, 2 on a usage error.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace rsemi
