#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fraclap/fractional_laplacian.hpp"
#include "fraclap/reference.hpp"
#include "fraclap/types.hpp"

namespace fraclap::cli {

enum ExitCode : int {
  kOk = 0,
  kConfigError = 2,
  kShapeError = 3,
  kBlowUp = 4,
  kNumericError = 5,
  kIoError = 6,
};

enum class Command { kApply, kSweep, kNls };
enum class Format { kCsv, kJson };

struct RunConfig {
  Command command = Command::kApply;
  std::vector<double> alpha{1.3};
  std::vector<std::int64_t> N{1024};
  std::vector<std::int64_t> r{4};
  double L = 1.0;
  std::string input;  ///< builtin:rational, builtin:erf, builtin:gaussian or a file path
  std::string output = "-";
  Format format = Format::kCsv;
  double dt = 0.01;
  double t_end = 1.0;
  std::int64_t snapshot_every = 100;
  std::string snapshot_prefix;  ///< empty: derived from output, or none for stdout
};

/// Parses argv into a RunConfig. Throws ParameterError on bad flags or values.
RunConfig parse_args(const std::vector<std::string>& args);

/// Checks every parameter combination against the module preconditions.
void validate(const RunConfig& cfg);

/// One complex value per line, "re im". Blank lines and lines starting with
/// '#' are skipped. Throws InputError when unreadable, ShapeError when the
/// count is not N.
ComplexVector read_samples(const std::string& path, std::int64_t N);

/// Result of evaluating a builtin or sampled input on one grid.
struct Evaluation {
  ComplexVector values;
  std::optional<ComplexVector> exact;
};

/// u = (ix-1)/(ix+1) uses the analytic f; erf and gaussian go through the
/// spectral path from their samples. Only rational and erf have an exact
/// solution attached.
Evaluation evaluate_builtin(const std::string& name, const FracLapParams& p);

int cmd_apply(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);
int cmd_nls(const RunConfig& cfg, std::ostream& out);

/// Full front end: parse, validate, dispatch, map exceptions to exit codes.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fraclap::cli
