#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockwake::cli {

// Exit statuses of `blockwake`.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,         // unknown flag, missing argument
  kInvalidPlan = 3,   // malformed or impossible structure name
  kBudget = 4,        // enumeration or cache budget refused
  kConfig = 5,        // invalid configuration value
  kEvaluation = 6,    // landscape or indicator failure during a run
  kIo = 7,
};

// Runs one command line (without the program name). Results go to `out`;
// failures print one JSON line {"error","code","message"} to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockwake::cli
