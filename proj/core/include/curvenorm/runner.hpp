#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "curvenorm/types.hpp"
#include "curvenorm/zoo.hpp"

namespace curvenorm {

enum class Task { regularity, douglas, spectral, interior, exterior, verify };

/// Exit codes used by run() and the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNumeric = 3;
inline constexpr int kExitVerifyFailed = 4;

struct NumericParams {
  int n_nodes = 4096;
  double h = 1.0 / 256.0;
  double tol = 1e-8;
  int refine = 8;
  double slack = 0.05;  // may be negative (down to > -1) to tighten brackets
};

struct FunctionRef {
  FunctionSpec spec;  // used when file is empty
  std::string file;
};

struct RunConfig {
  CurveSpec curve_spec;    // used when curve_file is empty
  std::string curve_file;
  std::vector<FunctionRef> functions;
  std::vector<Task> tasks;
  NumericParams numeric;
  std::string output_dir = ".";
  std::string format = "json";  // json | csv
  bool dump_field = false;
};

/// Parses and validates a config document; throws config_error on any
/// schema violation (unknown task, bad numeric ranges, N not a power of two
/// when a spectral quantity is requested, ...).
RunConfig parse_run_config(const std::string& json_text);

/// Executes the configured tasks in the fixed order regularity -> douglas
/// -> spectral -> interior -> exterior -> verify, writing one report per
/// task to the output directory. Returns kExitOk or kExitVerifyFailed;
/// config/io/numeric failures are thrown as their exception types.
int run(const RunConfig& config, std::ostream& log);

std::string task_name(Task task);

}  // namespace curvenorm
