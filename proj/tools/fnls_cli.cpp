// fnls: command-line harness for the fractional NLS solver.
//
//   fnls run               --config cfg.txt
//   fnls conservation      --config cfg.txt
//   fnls convergence-time  --config cfg.txt
//   fnls convergence-space --config cfg.txt [--long]
//   fnls oracle-verify     [--config cfg.txt]
//
// Exit codes: 0 success, 1 configuration error, 2 solver non-convergence,
// 3 oracle failure.

#include "fnls/config.hpp"
#include "fnls/harness.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>

namespace {

enum ExitCode { ok = 0, config_error = 1, solver_failure = 2, oracle_failure = 3 };

// CSV goes to cfg.output when set, stdout otherwise.
struct Sink {
  explicit Sink(const std::filesystem::path &path) {
    if (!path.empty()) {
      if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
      }
      file.open(path);
      if (!file) {
        throw fnls::ConfigError("cannot write output '" + path.string() + "'");
      }
    }
  }
  std::ostream &stream() { return file.is_open() ? static_cast<std::ostream &>(file) : std::cout; }
  std::ofstream file;
};

std::filesystem::path sibling(const std::filesystem::path &output, const std::string &suffix) {
  std::filesystem::path base = output.empty() ? std::filesystem::path("fnls") : output;
  return base.parent_path() / (base.stem().string() + suffix);
}

int cmd_run(const fnls::ExperimentConfig &cfg) {
  Sink sink(cfg.output);
  auto &out = sink.stream();
  fnls::write_record_header(out);
  fnls::Observer observer;
  observer.on_record = [&](const fnls::RunRecord &rec) { fnls::write_record_row(out, rec); };
  const auto result = fnls::integrate(cfg, cfg.n, cfg.tau, observer);
  const auto final_path = sibling(cfg.output, "_final.csv");
  fnls::write_state(final_path, result.final_state.u);
  std::cerr << fmt::format("run: {} steps to t = {:.6g}; final state in {}\n", result.final_state.step_index,
                           result.final_state.time, final_path.string());
  return ok;
}

int cmd_conservation(const fnls::ExperimentConfig &cfg) {
  Sink sink(cfg.output);
  const auto snapshots = cfg.snapshot_stride > 0 ? sibling(cfg.output, "_snapshots") : std::filesystem::path{};
  const auto summary = fnls::run_conservation(cfg, sink.stream(), snapshots);
  std::cerr << fmt::format("conservation: max rel mass drift {:.3e}, max rel energy drift {:.3e}\n",
                           summary.max_rel_mass_drift, summary.max_rel_energy_drift);
  std::cerr << fmt::format("bounds: max ||U||_h {:.6g}, max |U|_H {:.6g}, max ||U||_inf {:.6g}\n",
                           summary.bounds.max_l2, summary.bounds.max_seminorm, summary.bounds.max_linf);
  if (summary.snapshots_written > 0) {
    std::cerr << fmt::format("{} snapshots in {}\n", summary.snapshots_written, snapshots.string());
  }
  return ok;
}

int cmd_convergence(const fnls::ExperimentConfig &cfg) {
  const auto rows = cfg.experiment == fnls::Experiment::convergence_time ? fnls::run_convergence_time(cfg)
                                                                         : fnls::run_convergence_space(cfg);
  Sink sink(cfg.output);
  fnls::write_convergence_csv(sink.stream(), rows);
  return ok;
}

int cmd_oracle(const fnls::ExperimentConfig &cfg, bool inject_fault) {
  fnls::OracleOptions options;
  options.a = cfg.problem.a;
  options.b = cfg.problem.b;
  options.seed = cfg.seed;
  options.corrupt_symbol = inject_fault;
  const auto report = fnls::oracle_verify(options);
  Sink sink(cfg.output);
  fnls::write_oracle_report(sink.stream(), report);
  return report.passed() ? ok : oracle_failure;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Conservative Fourier pseudo-spectral solver for the fractional NLS equation"};
  app.require_subcommand(1);

  std::string config_path;
  bool long_run = false;
  bool inject_fault = false;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"run", "integrate one problem and write per-step diagnostics"},
      {"conservation", "per-step mass/energy drifts, optional |u| snapshots"},
      {"convergence-time", "temporal convergence table against the exact plane wave"},
      {"convergence-space", "spatial convergence table against the exact plane wave"},
      {"oracle-verify", "compare the FFT path with direct O(N^2) summation"},
  };
  for (const auto &[name, help] : commands) {
    auto *sub = app.add_subcommand(name, help);
    auto *opt = sub->add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    if (name != "oracle-verify") {
      opt->required();
    }
    if (name == "convergence-space") {
      sub->add_flag("--long", long_run, "full-scale run with tau = 1e-6, T = 1");
    }
    if (name == "oracle-verify") {
      sub->add_flag("--inject-fault", inject_fault, "shift the symbol table by one slot to exercise failure");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config_error;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    fnls::ExperimentConfig cfg = config_path.empty() ? fnls::ExperimentConfig{} : fnls::load_config(config_path);
    cfg.experiment = fnls::parse_experiment(command);
    if (long_run) {
      cfg.tau = 1e-6;
      cfg.horizon = 1.0;
    }
    switch (cfg.experiment) {
    case fnls::Experiment::run:
      cfg.validate();
      return cmd_run(cfg);
    case fnls::Experiment::conservation:
      return cmd_conservation(cfg);
    case fnls::Experiment::convergence_time:
    case fnls::Experiment::convergence_space:
      return cmd_convergence(cfg);
    case fnls::Experiment::oracle_verify:
      cfg.validate();
      return cmd_oracle(cfg, inject_fault);
    }
  } catch (const fnls::SolverError &e) {
    std::cerr << "solver error: " << e.what() << '\n';
    return solver_failure;
  } catch (const fnls::ConfigError &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return config_error;
  } catch (const std::invalid_argument &e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return config_error;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return config_error;
  }
  return ok;
}
