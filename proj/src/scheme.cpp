#include "fnls/scheme.hpp"

#include "fnls/transform.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace fnls {

namespace {

void check_operator(const FractionalSymbol &sym, const SchemeParams &params) {
  if (!(params.alpha > 1.0 && params.alpha <= 2.0)) {
    throw std::invalid_argument("scheme: alpha must lie in (1, 2]");
  }
  if (sym.alpha() != params.alpha) {
    throw std::invalid_argument("scheme: symbol order does not match params.alpha");
  }
}

void check_solver_controls(const SchemeParams &params) {
  if (!(params.fp_tolerance >= 1e-15) || !std::isfinite(params.fp_tolerance)) {
    throw std::invalid_argument("scheme: fp_tolerance must be finite and >= 1e-15");
  }
  if (params.fp_max_iters == 0) {
    throw std::invalid_argument("scheme: fp_max_iters must be >= 1");
  }
  if (!std::isfinite(params.beta)) {
    throw std::invalid_argument("scheme: beta must be finite");
  }
}

double relative_drift(double value, double initial) {
  const double diff = std::abs(value - initial);
  if (initial == 0.0) {
    return diff == 0.0 ? 0.0 : diff;
  }
  return diff / std::abs(initial);
}

} // namespace

void SchemeParams::validate() const {
  if (!(alpha > 1.0 && alpha <= 2.0)) {
    throw std::invalid_argument("scheme: alpha must lie in (1, 2]");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("scheme: tau must be positive and finite");
  }
  if (n_steps == 0) {
    throw std::invalid_argument("scheme: n_steps must be >= 1");
  }
  check_solver_controls(*this);
}

SolverError::SolverError(std::size_t step, double last_update, std::size_t iterations)
    : std::runtime_error(fmt::format("fixed-point iteration did not converge at step {} after {} sweeps "
                                     "(last update {:.3e})",
                                     step, iterations, last_update)),
      step_(step), last_update_(last_update), iterations_(iterations) {}

double mass(const GridFunction &u) {
  const double l2 = norm_l2(u);
  return l2 * l2;
}

double energy(const GridFunction &u, const FractionalSymbol &sym, double beta) {
  require_same_grid(sym.spec(), u.spec(), "energy");
  const double semi = seminorm_sobolev(u, sym.alpha() / 2.0);
  double quartic = 0.0;
  for (const auto &v : u.values()) {
    const double m = std::norm(v);
    quartic += m * m;
  }
  quartic /= static_cast<double>(u.size());
  return semi * semi - 0.5 * beta * quartic;
}

StepResult crank_nicolson_step(const State &state, const FractionalSymbol &sym, const SchemeParams &params) {
  check_operator(sym, params);
  check_solver_controls(params);
  if (params.tau == 0.0 || !std::isfinite(params.tau)) {
    throw std::invalid_argument("scheme: tau must be nonzero and finite");
  }
  const GridSpec &spec = state.u.spec();
  require_same_grid(sym.spec(), spec, "crank_nicolson_step");

  const std::size_t n = spec.size();
  const auto current = state.u.values();
  const auto d = sym.multipliers();
  const cplx shift{0.0, 2.0 / params.tau};

  // The iteration runs on the increment delta = W - U^n, which satisfies
  //   (2i/tau - Lambda) delta = Lambda U^n - (beta/2)(|U^n|^2 + |U^n + 2 delta|^2)(U^n + delta).
  // delta is O(tau) relative to U^n, so rounding in the solve stays small.
  std::vector<cplx> linear_rhs(n);
  forward_transform(spec, current, linear_rhs);
  std::vector<cplx> inv_denominator(n);
  for (std::size_t s = 0; s < n; ++s) {
    linear_rhs[s] *= d[s];
    inv_denominator[s] = 1.0 / (shift - d[s]);
  }

  std::vector<cplx> delta(n, cplx{});
  std::vector<cplx> next_delta(n);
  std::vector<cplx> work(n);
  std::vector<cplx> work_hat(n);

  std::size_t iters = 0;
  double update = 0.0;
  bool converged = false;
  while (iters < params.fp_max_iters) {
    ++iters;
    if (params.beta == 0.0) {
      std::fill(work_hat.begin(), work_hat.end(), cplx{});
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        const cplx next_guess = current[j] + 2.0 * delta[j];
        work[j] = 0.5 * params.beta * (std::norm(current[j]) + std::norm(next_guess)) * (current[j] + delta[j]);
      }
      forward_transform(spec, work, work_hat);
    }
    for (std::size_t s = 0; s < n; ++s) {
      work_hat[s] = (linear_rhs[s] - work_hat[s]) * inv_denominator[s];
    }
    inverse_transform(spec, work_hat, next_delta);

    update = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      update = std::max(update, std::abs(next_delta[j] - delta[j]));
    }
    delta.swap(next_delta);
    // With beta == 0 the first sweep is the exact linear solve.
    if (params.beta == 0.0 || update <= params.fp_tolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw SolverError(state.step_index + 1, update, iters);
  }

  std::vector<cplx> next(n);
  for (std::size_t j = 0; j < n; ++j) {
    next[j] = current[j] + 2.0 * delta[j];
  }
  State out{GridFunction(spec, std::move(next)), state.step_index + 1,
            static_cast<double>(state.step_index + 1) * params.tau};
  return {std::move(out), iters, update};
}

double step_residual(const GridFunction &current, const GridFunction &next, const FractionalSymbol &sym,
                     double beta, double tau) {
  require_same_grid(current.spec(), next.spec(), "step_residual");
  const GridFunction mid = (current + next) * 0.5;
  const GridFunction dmid = apply_fractional_laplacian(sym, mid);
  double worst = 0.0;
  for (std::size_t j = 0; j < current.size(); ++j) {
    const cplx dt = (next[j] - current[j]) / tau;
    const cplx nonlinear = 0.25 * beta * (std::norm(current[j]) + std::norm(next[j])) * (current[j] + next[j]);
    worst = std::max(worst, std::abs(cplx{0.0, 1.0} * dt - dmid[j] + nonlinear));
  }
  return worst;
}

RunResult run(const GridFunction &initial, const FractionalSymbol &sym, const SchemeParams &params,
              const Observer &observer) {
  params.validate();
  check_operator(sym, params);
  require_same_grid(sym.spec(), initial.spec(), "run");

  RunResult result{{}, State{initial, 0, 0.0}, {}};
  result.records.reserve(params.n_steps + 1);

  const double m0 = mass(initial);
  const double e0 = energy(initial, sym, params.beta);
  const double half_order = params.alpha / 2.0;

  auto track = [&](const State &st, std::size_t fp_iters) {
    RunRecord rec;
    rec.step_index = st.step_index;
    rec.time = st.time;
    rec.mass = mass(st.u);
    rec.energy = energy(st.u, sym, params.beta);
    rec.rel_mass_drift = relative_drift(rec.mass, m0);
    rec.rel_energy_drift = relative_drift(rec.energy, e0);
    rec.rel_mass_drift_energy_norm = e0 == 0.0 ? 0.0 : std::abs(rec.mass - m0) / std::abs(e0);
    rec.fp_iters = fp_iters;

    auto &b = result.bounds;
    b.max_l2 = std::max(b.max_l2, std::sqrt(rec.mass));
    b.max_seminorm = std::max(b.max_seminorm, seminorm_sobolev(st.u, half_order));
    b.max_linf = std::max(b.max_linf, norm_linf(st.u));

    if (observer.on_record) {
      observer.on_record(rec);
    }
    const bool final_step = st.step_index == params.n_steps;
    if (observer.on_snapshot && observer.snapshot_stride > 0 &&
        (st.step_index % observer.snapshot_stride == 0 || final_step)) {
      observer.on_snapshot(st);
    }
    result.records.push_back(rec);
  };

  track(result.final_state, 0);
  for (std::size_t step = 0; step < params.n_steps; ++step) {
    StepResult next = crank_nicolson_step(result.final_state, sym, params);
    result.final_state = std::move(next.state);
    track(result.final_state, next.fp_iters);
  }
  return result;
}

} // namespace fnls
