#pragma once

// Subcommand bodies for the polylink tool. Argument parsing lives in the
// executable; everything here takes a filled RunConfig and writes to streams.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace polylink {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,   // verification or property check failed
  kExitConfig = 2,     // bad flags or unreadable input
  kExitPrecision = 3,  // a floor could not be certified
  kExitInternal = 4,   // internal invariant violated
};

struct RunConfig {
  std::string command;
  std::string base = "all";    // s4 | d6 | all
  int n_min = 0;               // 0: from 3
  int n_max = 0;               // 0: positivity ceiling
  std::string format = "table";  // table | json | csv | dot | off | obj
  int jobs = 1;
  std::string output;          // empty: stdout

  // verify
  bool counts_only = false;
  std::string golden;          // JSON file replacing the embedded table

  // dessin, surface
  int row = 1;
  int realization = 0;
  int refinement = 3;
  int sample_level = 3;
  bool certify = false;        // surface: certify every link instead
  int max_refinement = 6;      // ceiling for --certify

  // bounds
  int dimension = 3;
  std::string epsilon;
  bool epsilon_grid = false;
  int grid_points = 1000;
  int precision_digits = 60;

  // narrow-demo
  std::optional<std::uint64_t> seed;
  std::string generator = "uniform";  // uniform | clustered
  std::string input;                  // CSV point cloud
  std::size_t points = 2000;
  int levels = 5;
  std::string alpha = "1/3";
  int clouds = 1;
};

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_dessin(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_surface(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_bounds(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_narrow_demo(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command, maps exceptions to exit codes and honours
/// config.output.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace polylink
