#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "ucr/target.hpp"

namespace ucr::cli {

enum class Format { Json, Csv, Text };

/// Everything one invocation needs, from flags or a JSON job file.
struct JobSpec {
  std::string command;  // eval, zeros, radius, verify, sweep, limit-check
  std::string family = "qbessel";
  int kind = 2;
  double nu = 1.0;
  double q = 0.5;
  double rho = 1.0;
  double beta = 1.0;
  std::string norm = "g";
  Format format = Format::Json;
  /// Empty: use UC_RADIUS_CACHE if set, otherwise no cache.
  std::string cache_dir;
  /// verify: allowed |oracle - radius|.
  double tol = 1e-6;
  /// Relative root tolerance for radius work.
  double root_tol = 1e-12;

  // eval
  std::string function = "jackson";
  double z = 0.5;
  double zi = 0.0;
  int deriv = 0;
  double a = 0.5;
  long n = -1;  // q-Pochhammer length; negative means infinite

  // zeros
  std::string which = "Function";
  int count = 10;

  // sweep
  std::vector<int> kinds{2, 3};
  std::vector<double> nus{0.25, 0.5, 1.0, 1.5, 2.0};
  std::vector<double> qs{0.3, 0.5, 0.8};
  std::vector<double> rhos{0.5, 1.0, 2.0};
  std::vector<double> betas{0.5, 1.0, 1.5, 2.0};
  std::vector<std::string> norms{"f", "g", "h"};
  bool serial = false;

  /// Family, parameters and normalization as a radius target (validated).
  [[nodiscard]] UcTarget target() const;
};

/// Fields of a JSON job file; names match the long flags with '_' for '-'.
[[nodiscard]] JobSpec job_from_json(const nlohmann::json& j);

/// Sweep grid in row order: q-Bessel points (kind, nu, q, norm) then Wright
/// points (rho, beta, norm), each restricted by `family` ("qbessel",
/// "wright" or "all"). f is skipped for nu <= 0.
[[nodiscard]] std::vector<UcTarget> sweep_grid(const JobSpec& spec);

/// Runs one job. Exit status: 0 success, 1 invalid input, 2 numerical failure.
int run_job(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Parses flags (or --job <path>) and runs the job.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ucr::cli
