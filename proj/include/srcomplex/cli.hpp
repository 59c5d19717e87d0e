#ifndef SRCOMPLEX_CLI_HPP
#define SRCOMPLEX_CLI_HPP

#include <string>
#include <vector>

namespace srcomplex::cli {

inline constexpr const char* kReportSchema = "srcomplex.report/1";

/// Captured outcome of one command-line invocation.
struct Report {
  int exit_code = 0;
  std::string out;  // stdout payload
  std::string err;  // stderr payload (error JSON on failure)
};

/// Exit codes: 0 success, 1 check-dimension bound violated, 2 error.
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs a command line without the program name, e.g.
/// {"complex", "T57.mat", "--json"}. Files named by -o are written here.
Report execute(const std::vector<std::string>& args);

}  // namespace srcomplex::cli

#endif  // SRCOMPLEX_CLI_HPP
