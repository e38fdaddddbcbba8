#pragma once

#include <iosfwd>

namespace graphgeo::cli {

// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags, invalid protocol or qubit pair, degenerate grid
  kInputError = 2,    // unreadable or malformed graph file
  kZeroVariance = 3,  // graph without edges: curvature/torsion undefined
  kOracleCap = 4,     // brute-force oracle refused the node count
};

// Environment override for the oracle node cap.
inline constexpr const char* kOracleCapEnv = "GRAPHGEO_ORACLE_MAX_NODES";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphgeo::cli
