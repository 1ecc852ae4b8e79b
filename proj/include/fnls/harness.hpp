#pragma once

#include "fnls/config.hpp"
#include "fnls/fractional.hpp"
#include "fnls/scheme.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fnls {

/// ln(err1/err2) / ln(s1/s2). All inputs must be positive and s1 != s2.
double compute_order(double err1, double err2, double s1, double s2);

struct ConvergenceRow {
  double alpha = 0.0;
  double tau = 0.0;
  std::size_t n = 0;
  double linf_err = 0.0;
  double l2_err = 0.0;
  std::optional<double> order_linf;
  std::optional<double> order_l2;
};

/// Grid of the configured problem with N nodes, routed through the naive
/// transform when cfg.oracle_mode is set.
GridSpec make_grid(const ExperimentConfig &cfg, std::size_t n);

SchemeParams make_params(const ExperimentConfig &cfg, double tau);

/// Integrates the configured problem on N nodes with time step tau up to
/// cfg.horizon (under cfg.step_count).
RunResult integrate(const ExperimentConfig &cfg, std::size_t n, double tau, const Observer &observer = {});

/// Temporal study: one row per tau in cfg.sweep_tau on N = cfg.n, errors
/// against the exact plane wave at the final time, orders between adjacent
/// rows.
std::vector<ConvergenceRow> run_convergence_time(const ExperimentConfig &cfg);

/// Spatial study: one row per N in cfg.sweep_n at tau = cfg.tau; no orders.
std::vector<ConvergenceRow> run_convergence_space(const ExperimentConfig &cfg);

struct ConservationSummary {
  std::vector<RunRecord> records;
  BoundsMonitor bounds;
  BoundsMonitor initial;
  double max_rel_mass_drift = 0.0;
  double max_rel_energy_drift = 0.0;
  std::size_t snapshots_written = 0;
};

/// Runs the configured problem, streaming RunRecord rows to `csv` as they
/// are produced and, when cfg.snapshot_stride > 0, writing |u| snapshots
/// into `snapshot_dir`.
ConservationSummary run_conservation(const ExperimentConfig &cfg, std::ostream &csv,
                                     const std::filesystem::path &snapshot_dir = {});

// CSV emission. Floating-point fields carry 17 significant digits.
std::string format_real(double value);
void write_record_header(std::ostream &out);
void write_record_row(std::ostream &out, const RunRecord &rec);
void write_convergence_csv(std::ostream &out, const std::vector<ConvergenceRow> &rows);
/// `x,abs_u` per node.
void write_snapshot(const std::filesystem::path &path, const GridFunction &u);
/// `x,re,im` per node.
void write_state(const std::filesystem::path &path, const GridFunction &u);
std::filesystem::path snapshot_path(const std::filesystem::path &dir, std::size_t step);

struct OracleCheck {
  std::string name;
  std::size_t n = 0;
  double max_error = 0.0;
  /// Node or wavenumber slot where the largest discrepancy was found.
  std::size_t location = 0;
  bool passed = true;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  double tolerance = 1e-12;
  bool passed() const;
  double max_error() const;
};

struct OracleOptions {
  std::vector<std::size_t> sizes{8, 16, 32, 64};
  std::vector<double> alphas{1.1, 1.4, 1.7, 2.0};
  double a = -3.14159265358979323846;
  double b = 3.14159265358979323846;
  unsigned long long seed = 20240601ULL;
  std::size_t samples = 3;
  double tolerance = 1e-12;
  /// Shift the fast-path symbol table by one slot (fault injection).
  bool corrupt_symbol = false;
};

/// Compares the FFT path with direct summation for the transforms, the
/// fractional Laplacian and every norm on random inputs. Errors are measured
/// as max |fast - naive| / max(1, max |naive|).
OracleReport oracle_verify(const OracleOptions &options);
void write_oracle_report(std::ostream &out, const OracleReport &report);

} // namespace fnls
