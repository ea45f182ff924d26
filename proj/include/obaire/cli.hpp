#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace obaire
{
  /// Exit statuses of run_cli.
  enum exit_status : int
  {
    exit_pass = 0,
    exit_fail = 1,
    exit_usage = 2,
    exit_capacity = 3,
  };

  /// \a args excludes the program name.
  int run_cli(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err);
}
