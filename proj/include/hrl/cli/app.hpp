#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrl::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseFailure = 2,
  kValidationFailure = 3,
  kNoConvergence = 4,
};

/// Runs one command line. args excludes the program name. Documents go to
/// `out` (or to the files named by --json/--csv/--svg), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Writes content to path through a temporary file and a rename, so readers
/// never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hrl::cli
