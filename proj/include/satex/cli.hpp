#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace satex {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParameter = 2,
  kExitSizeRefusal = 3,
  kExitSoundnessAlarm = 4,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics and usage text to `err`.
///
/// Subcommands: count, build, bound, satex, turan, phase, berge, sweep.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace satex
