#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcxag
{

enum exit_code : int
{
  exit_ok = 0,
  exit_verification_failed = 1,
  exit_usage = 2
};

/*! \brief Runs the `synth`, `verify`, `lemmas` and `stats` subcommands.

  `args` excludes the program name.  Results go to `out`, diagnostics and
  usage text to `err`.
*/
int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err );

} // namespace mcxag
