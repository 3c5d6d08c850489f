#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hallkit/report.hpp"

namespace hallkit {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct CliOutcome {
  std::optional<Report> report;  // absent only for --help
  int exit_code = kExitPass;
  std::string out;  // standard output
  std::string err;  // standard error
};

// Runs one command line (without the program name).
CliOutcome dispatch(const std::vector<std::string>& args);

}  // namespace hallkit
