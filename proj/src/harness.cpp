#include "fnls/harness.hpp"

#include "fnls/reference.hpp"
#include "fnls/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <fstream>
#include <ostream>
#include <random>
#include <thread>

namespace fnls {

double compute_order(double err1, double err2, double s1, double s2) {
  if (!(err1 > 0.0 && err2 > 0.0 && s1 > 0.0 && s2 > 0.0)) {
    throw std::invalid_argument("compute_order: errors and step sizes must be positive");
  }
  if (s1 == s2) {
    throw std::invalid_argument("compute_order: step sizes must differ");
  }
  return std::log(err1 / err2) / std::log(s1 / s2);
}

GridSpec make_grid(const ExperimentConfig &cfg, std::size_t n) {
  return GridSpec(cfg.problem.a, cfg.problem.b, n, cfg.oracle_mode ? TransformPath::naive : TransformPath::fast);
}

SchemeParams make_params(const ExperimentConfig &cfg, double tau) {
  SchemeParams params;
  params.alpha = cfg.problem.alpha;
  params.beta = cfg.problem.beta;
  params.tau = tau;
  params.n_steps = cfg.steps_for(tau);
  params.fp_tolerance = cfg.fp_tolerance;
  params.fp_max_iters = cfg.fp_max_iters;
  return params;
}

RunResult integrate(const ExperimentConfig &cfg, std::size_t n, double tau, const Observer &observer) {
  const GridSpec spec = make_grid(cfg, n);
  const FractionalSymbol sym(spec, cfg.problem.alpha);
  return run(initial_condition(cfg.problem, spec), sym, make_params(cfg, tau), observer);
}

namespace {

// Evaluates job(i) for i in [0, count) on up to `workers` threads. Results
// land in index order; the first failure in index order is rethrown.
template <typename Result, typename Job>
std::vector<Result> run_sweep(std::size_t count, std::size_t workers, Job job) {
  std::vector<std::optional<Result>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(std::max<std::size_t>(workers, 1), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) {
      std::rethrow_exception(errors[i]);
    }
    out.push_back(std::move(*results[i]));
  }
  return out;
}

ConvergenceRow plane_wave_row(const ExperimentConfig &cfg, std::size_t n, double tau) {
  const RunResult result = integrate(cfg, n, tau);
  const GridSpec &spec = result.final_state.u.spec();
  const auto lambda = static_cast<long>(cfg.problem.parameter("lambda", 4.0));
  const GridFunction exact = plane_wave_exact(spec, result.final_state.time, cfg.problem.parameter("A", 1.0), lambda,
                                              cfg.problem.alpha, cfg.problem.beta);
  const ErrorNorms err = error_norms(result.final_state.u, exact);
  ConvergenceRow row;
  row.alpha = cfg.problem.alpha;
  row.tau = tau;
  row.n = n;
  row.linf_err = err.linf;
  row.l2_err = err.l2;
  return row;
}

} // namespace

std::vector<ConvergenceRow> run_convergence_time(const ExperimentConfig &cfg) {
  ExperimentConfig local = cfg;
  local.experiment = Experiment::convergence_time;
  local.validate();
  auto rows = run_sweep<ConvergenceRow>(local.sweep_tau.size(), local.workers,
                                        [&](std::size_t i) { return plane_wave_row(local, local.n, local.sweep_tau[i]); });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto &prev = rows[i - 1];
    auto &row = rows[i];
    if (prev.linf_err > 0.0 && row.linf_err > 0.0) {
      row.order_linf = compute_order(prev.linf_err, row.linf_err, prev.tau, row.tau);
    }
    if (prev.l2_err > 0.0 && row.l2_err > 0.0) {
      row.order_l2 = compute_order(prev.l2_err, row.l2_err, prev.tau, row.tau);
    }
  }
  return rows;
}

std::vector<ConvergenceRow> run_convergence_space(const ExperimentConfig &cfg) {
  ExperimentConfig local = cfg;
  local.experiment = Experiment::convergence_space;
  local.validate();
  return run_sweep<ConvergenceRow>(local.sweep_n.size(), local.workers,
                                   [&](std::size_t i) { return plane_wave_row(local, local.sweep_n[i], local.tau); });
}

std::filesystem::path snapshot_path(const std::filesystem::path &dir, std::size_t step) {
  return dir / fmt::format("step_{:08d}.csv", step);
}

ConservationSummary run_conservation(const ExperimentConfig &cfg, std::ostream &csv,
                                     const std::filesystem::path &snapshot_dir) {
  ExperimentConfig local = cfg;
  local.experiment = Experiment::conservation;
  local.validate();

  ConservationSummary summary;
  write_record_header(csv);
  Observer observer;
  observer.on_record = [&](const RunRecord &rec) {
    write_record_row(csv, rec);
    summary.max_rel_mass_drift = std::max(summary.max_rel_mass_drift, rec.rel_mass_drift);
    summary.max_rel_energy_drift = std::max(summary.max_rel_energy_drift, rec.rel_energy_drift);
  };
  if (local.snapshot_stride > 0) {
    if (snapshot_dir.empty()) {
      throw ConfigError("snapshot_stride > 0 needs an output location for snapshots");
    }
    std::filesystem::create_directories(snapshot_dir);
    observer.snapshot_stride = local.snapshot_stride;
    observer.on_snapshot = [&](const State &st) {
      write_snapshot(snapshot_path(snapshot_dir, st.step_index), st.u);
      ++summary.snapshots_written;
    };
  }

  const GridSpec spec = make_grid(local, local.n);
  const FractionalSymbol sym(spec, local.problem.alpha);
  const GridFunction initial = initial_condition(local.problem, spec);
  summary.initial = {norm_l2(initial), seminorm_sobolev(initial, local.problem.alpha / 2.0), norm_linf(initial)};

  RunResult result = run(initial, sym, make_params(local, local.tau), observer);
  summary.records = std::move(result.records);
  summary.bounds = result.bounds;
  return summary;
}

std::string format_real(double value) { return fmt::format("{:.17g}", value); }

void write_record_header(std::ostream &out) {
  out << "step,time,mass,energy,rel_mass_drift,rel_energy_drift,rel_mass_drift_paper_norm,fp_iters\n";
}

void write_record_row(std::ostream &out, const RunRecord &rec) {
  out << rec.step_index << ',' << format_real(rec.time) << ',' << format_real(rec.mass) << ','
      << format_real(rec.energy) << ',' << format_real(rec.rel_mass_drift) << ',' << format_real(rec.rel_energy_drift)
      << ',' << format_real(rec.rel_mass_drift_energy_norm) << ',' << rec.fp_iters << '\n';
}

void write_convergence_csv(std::ostream &out, const std::vector<ConvergenceRow> &rows) {
  out << "alpha,tau,N,linf_err,l2_err,order_linf,order_l2\n";
  for (const auto &row : rows) {
    out << format_real(row.alpha) << ',' << format_real(row.tau) << ',' << row.n << ',' << format_real(row.linf_err)
        << ',' << format_real(row.l2_err) << ',' << (row.order_linf ? format_real(*row.order_linf) : "") << ','
        << (row.order_l2 ? format_real(*row.order_l2) : "") << '\n';
  }
}

namespace {

std::ofstream open_output(const std::filesystem::path &path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  return out;
}

} // namespace

void write_snapshot(const std::filesystem::path &path, const GridFunction &u) {
  auto out = open_output(path);
  out << "x,abs_u\n";
  for (std::size_t j = 0; j < u.size(); ++j) {
    out << format_real(u.spec().node(j)) << ',' << format_real(std::abs(u[j])) << '\n';
  }
}

void write_state(const std::filesystem::path &path, const GridFunction &u) {
  auto out = open_output(path);
  out << "x,re,im\n";
  for (std::size_t j = 0; j < u.size(); ++j) {
    out << format_real(u.spec().node(j)) << ',' << format_real(u[j].real()) << ',' << format_real(u[j].imag())
        << '\n';
  }
}

// ---------------------------------------------------------------------------
// oracle battery

bool OracleReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck &c) { return c.passed; });
}

double OracleReport::max_error() const {
  double m = 0.0;
  for (const auto &c : checks) {
    m = std::max(m, c.max_error);
  }
  return m;
}

namespace {

struct Discrepancy {
  double error = 0.0;
  std::size_t location = 0;
};

Discrepancy compare(std::span<const cplx> fast, std::span<const cplx> naive) {
  double scale = 1.0;
  for (const auto &v : naive) {
    scale = std::max(scale, std::abs(v));
  }
  Discrepancy d;
  for (std::size_t i = 0; i < fast.size(); ++i) {
    const double e = std::abs(fast[i] - naive[i]) / scale;
    if (e > d.error) {
      d = {e, i};
    }
  }
  return d;
}

Discrepancy compare_scalar(double fast, double naive) {
  return {std::abs(fast - naive) / std::max(1.0, std::abs(naive)), 0};
}

} // namespace

OracleReport oracle_verify(const OracleOptions &options) {
  OracleReport report;
  report.tolerance = options.tolerance;
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  auto record = [&](std::string name, std::size_t n, Discrepancy d) {
    for (auto &c : report.checks) {
      if (c.name == name && c.n == n) {
        if (d.error > c.max_error) {
          c.max_error = d.error;
          c.location = d.location;
        }
        c.passed = c.max_error <= options.tolerance;
        return;
      }
    }
    report.checks.push_back({std::move(name), n, d.error, d.location, d.error <= options.tolerance});
  };

  for (std::size_t n : options.sizes) {
    const GridSpec fast(options.a, options.b, n, TransformPath::fast);
    const GridSpec naive = fast.with_path(TransformPath::naive);
    for (std::size_t sample = 0; sample < options.samples; ++sample) {
      std::vector<cplx> values(n);
      for (auto &v : values) {
        v = {normal(rng), normal(rng)};
      }
      const GridFunction uf(fast, values);
      const GridFunction un(naive, values);

      const SpectrumFunction sf = forward_dft(uf);
      const SpectrumFunction sn = forward_dft(un);
      record("forward_dft", n, compare(sf.coeffs(), sn.coeffs()));

      std::vector<cplx> back_fast(n);
      std::vector<cplx> back_naive(n);
      inverse_transform(fast, values, back_fast);
      inverse_transform(naive, values, back_naive);
      record("inverse_dft", n, compare(back_fast, back_naive));

      for (double alpha : options.alphas) {
        FractionalSymbol sym_fast(fast, alpha);
        if (options.corrupt_symbol) {
          std::vector<double> shifted(sym_fast.multipliers().begin(), sym_fast.multipliers().end());
          std::rotate(shifted.begin(), shifted.begin() + 1, shifted.end());
          sym_fast = sym_fast.with_multipliers(std::move(shifted));
        }
        const GridFunction d_fast = apply_fractional_laplacian(sym_fast, uf);
        const std::vector<cplx> d_naive = reference::fractional_laplacian_sum(naive, alpha, values);
        record("fractional_laplacian", n, compare(d_fast.values(), d_naive));
      }

      record("norm_l2", n, compare_scalar(norm_l2(uf), norm_l2(un)));
      record("norm_l4", n, compare_scalar(norm_lp(uf, 4.0), norm_lp(un, 4.0)));
      record("norm_linf", n, compare_scalar(norm_linf(uf), norm_linf(un)));
      double parseval = 0.0;
      for (const auto &c : sn.coeffs()) {
        parseval += std::norm(c);
      }
      record("parseval", n, compare_scalar(norm_l2(uf), std::sqrt(parseval)));
      for (double sigma : {0.25, 0.5, 0.85, 1.0}) {
        record("seminorm_sobolev", n, compare_scalar(seminorm_sobolev(uf, sigma), seminorm_sobolev(un, sigma)));
        record("norm_sobolev", n, compare_scalar(norm_sobolev(uf, sigma), norm_sobolev(un, sigma)));
      }
    }
  }
  return report;
}

void write_oracle_report(std::ostream &out, const OracleReport &report) {
  out << "check,N,max_error,location,status\n";
  for (const auto &c : report.checks) {
    out << c.name << ',' << c.n << ',' << fmt::format("{:.3e}", c.max_error) << ',' << c.location << ','
        << (c.passed ? "pass" : "FAIL") << '\n';
  }
  out << fmt::format("# overall: {} (max error {:.3e}, tolerance {:.1e})\n", report.passed() ? "pass" : "FAIL",
                     report.max_error(), report.tolerance);
}

} // namespace fnls
