#pragma once

#include "fnls/problems.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fnls {

enum class Experiment { run, convergence_time, convergence_space, conservation, oracle_verify };

Experiment parse_experiment(const std::string &name);
std::string to_string(Experiment experiment);

/// How many steps a horizon T is split into.
///   exact:     T / tau steps, final time T.
///   inclusive: T / tau + 1 steps, final time T + tau. This is the count a
///              time loop over n = 0, ..., T/tau produces, and it is the
///              convention under which the published temporal-convergence
///              tables for the plane-wave example were generated.
enum class StepCount { exact, inclusive };

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::run;
  ProblemSpec problem;
  std::size_t n = 256;
  double tau = 0.01;
  double horizon = 1.0;
  StepCount step_count = StepCount::exact;
  double fp_tolerance = 1e-13;
  std::size_t fp_max_iters = 200;
  std::vector<double> sweep_tau;
  std::vector<std::size_t> sweep_n;
  std::filesystem::path output;
  bool oracle_mode = false;
  std::size_t snapshot_stride = 0;
  /// Worker threads for sweeps; rows are emitted in sweep order regardless.
  std::size_t workers = 1;
  /// Seed of the random battery used by oracle-verify.
  unsigned long long seed = 20240601ULL;

  /// Number of steps for time step tau under step_count. Throws ConfigError
  /// when horizon / tau is not integral to within 1e-9.
  std::size_t steps_for(double step) const;

  /// Checks cross-field invariants for `experiment`; throws ConfigError.
  void validate() const;
};

/// Parses `key = value` lines. Blank lines and lines starting with '#' are
/// ignored; list values are comma separated. Recognised keys:
///   problem, alpha, beta, domain_a, domain_b, N, tau, T, A, lambda,
///   fp_tolerance, fp_max_iters, output, oracle_mode, snapshot_stride,
///   sweep_tau, sweep_N, initial_data, step_count, workers, seed.
/// Unknown keys and malformed values raise ConfigError. Relative paths are
/// resolved against `base_dir`.
ExperimentConfig parse_config(std::istream &in, const std::filesystem::path &base_dir = {});
ExperimentConfig load_config(const std::filesystem::path &path);

} // namespace fnls
