#pragma once

#include "fnls/fractional.hpp"
#include "fnls/grid.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fnls {

/// Parameters of the conservative Crank-Nicolson pseudo-spectral scheme
///   i (U^{n+1} - U^n)/tau - D_alpha U^{n+1/2}
///     + (beta/4)(|U^n|^2 + |U^{n+1}|^2)(U^n + U^{n+1}) = 0.
struct SchemeParams {
  double alpha = 2.0;
  double beta = 0.0;
  double tau = 0.01;
  std::size_t n_steps = 1;
  double fp_tolerance = 1e-13;
  std::size_t fp_max_iters = 200;

  /// Throws std::invalid_argument on alpha outside (1, 2], non-positive or
  /// non-finite tau, n_steps == 0, fp_tolerance < 1e-15 or fp_max_iters == 0.
  void validate() const;
  double horizon() const noexcept { return tau * static_cast<double>(n_steps); }
};

struct State {
  GridFunction u;
  std::size_t step_index = 0;
  double time = 0.0;
};

struct RunRecord {
  std::size_t step_index = 0;
  double time = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double rel_mass_drift = 0.0;
  double rel_energy_drift = 0.0;
  /// |M^n - M^0| / |E^0|, the energy-normalized mass drift some authors
  /// report. Zero when E^0 == 0.
  double rel_mass_drift_energy_norm = 0.0;
  std::size_t fp_iters = 0;
};

/// Largest ||U^n||_h, |U^n|_{H^{alpha/2}_h} and ||U^n||_inf seen in a run.
struct BoundsMonitor {
  double max_l2 = 0.0;
  double max_seminorm = 0.0;
  double max_linf = 0.0;
};

/// Thrown when the inner fixed-point iteration does not reach the tolerance.
class SolverError : public std::runtime_error {
public:
  SolverError(std::size_t step, double last_update, std::size_t iterations);
  std::size_t step() const noexcept { return step_; }
  double last_update() const noexcept { return last_update_; }
  std::size_t iterations() const noexcept { return iterations_; }

private:
  std::size_t step_;
  double last_update_;
  std::size_t iterations_;
};

/// M = ||u||_h^2
double mass(const GridFunction &u);

/// E = |u|^2_{H^{alpha/2}_h} - (beta/2) ||u||^4_{l^4_h}, alpha taken from sym.
double energy(const GridFunction &u, const FractionalSymbol &sym, double beta);

struct StepResult {
  State state;
  std::size_t fp_iters = 0;
  /// Max-norm difference between the last two midpoint iterates.
  double last_update = 0.0;
};

/// Advances one step. The midpoint W = (U^{n+1} + U^n)/2 is found by the
/// fixed-point iteration
///   (2i/tau - D_alpha) W_{m+1} = (2i/tau) U^n - (beta/2)(|U^n|^2 + |2 W_m - U^n|^2) W_m,
/// with the linear operator inverted diagonally in Fourier space and
/// W_0 = U^n, stopping once ||W_{m+1} - W_m||_inf <= fp_tolerance. For
/// beta == 0 the first sweep is exact and is accepted immediately.
/// Internally the unknown is the increment W - U^n.
///
/// params.alpha must equal sym.alpha(). Unlike run(), a negative tau is
/// accepted so the scheme can be stepped backwards in time.
StepResult crank_nicolson_step(const State &state, const FractionalSymbol &sym, const SchemeParams &params);

/// Max-norm residual of the scheme equation for a computed step.
double step_residual(const GridFunction &current, const GridFunction &next, const FractionalSymbol &sym,
                     double beta, double tau);

struct Observer {
  std::function<void(const RunRecord &)> on_record;
  /// Called with step 0, every snapshot_stride steps, and the final state.
  /// Disabled when snapshot_stride == 0.
  std::function<void(const State &)> on_snapshot;
  std::size_t snapshot_stride = 0;
};

struct RunResult {
  std::vector<RunRecord> records;
  State final_state;
  BoundsMonitor bounds;
};

/// Integrates params.n_steps steps from `initial`, recording one RunRecord
/// for step 0 and one per step. Drifts are |X^n - X^0| / |X^0| with 0/0
/// taken as 0. SolverError from a failing step propagates with its index.
RunResult run(const GridFunction &initial, const FractionalSymbol &sym, const SchemeParams &params,
              const Observer &observer = {});

} // namespace fnls
