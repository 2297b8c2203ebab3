#ifndef NULLSL2_CLI_HPP
#define NULLSL2_CLI_HPP

// The commands behind the nullsl2 executable, as plain functions.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nullsl2/error.hpp"
#include "nullsl2/kernels.hpp"
#include "nullsl2/sl2curve.hpp"

namespace nullsl2::cli {

/// Log-polar sampling grid on the annulus r_inner <= |z - center| <= r_outer.
struct Grid {
  int radial = 32;
  int angular = 64;
  double r_inner = 0.1;
  double r_outer = 0.9;
  cplx center = 0.0;
};

enum class Target { h3, s31 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::string output;       // empty: report goes to stdout
  std::string spinor_out;   // solve: optional corrected spinor
  std::string csv_out;      // solve: optional period CSV
  int truncation_order = kDefaultTruncation;
  double tol = 1e-10;
  int max_iter = 20;
  Grid grid;
  std::uint64_t seed = 0x5eed;
  Target target = Target::h3;
  cplx point = 0.0;         // classify
  int multiplicity = 1;     // endmodel
  cplx center = 0.0;        // endmodel
};

/// Overlays the fields present in a JSON config file.
void load_config(const std::string& path, RunConfig& cfg);
/// NULLSL2_SEED, when set, replaces the seed.
void apply_environment(RunConfig& cfg);
/// Throws InvalidArgument on out-of-range settings.
void check_config(const RunConfig& cfg);

Grid parse_grid(const std::string& text, Grid base = {});
cplx parse_complex(const std::string& text);

struct Outcome {
  int exit_code = 0;
  bool error = false;  // report describes a library error
  std::string report;  // JSON text, newline terminated
  std::vector<std::string> warnings;
};

int exit_code_for(ErrorKind kind);

Outcome cmd_validate(const RunConfig& cfg);
Outcome cmd_classify(const RunConfig& cfg);
Outcome cmd_mesh(const RunConfig& cfg);
Outcome cmd_solve(const RunConfig& cfg);
Outcome cmd_endmodel(const RunConfig& cfg);

/// Dispatches on cfg.command; library errors become exit codes and an error
/// report instead of propagating.
Outcome run(const RunConfig& cfg);

struct Mesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based
  std::vector<double> metric;             // induced metric factor per vertex
  std::vector<double> x0;                 // time coordinate per vertex (s31)
  bool degenerate = false;
};

std::vector<cplx> grid_points(const Grid& g);
Mesh build_mesh(const SL2NullCurve& F, const Grid& g, Target target, kernels::Exec exec = kernels::Exec::parallel);
std::string to_obj(const Mesh& m, const Grid& g, Target target);

}  // namespace nullsl2::cli

#endif  // NULLSL2_CLI_HPP
