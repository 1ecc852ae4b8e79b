#include "fnls/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>

namespace fnls {

Experiment parse_experiment(const std::string &name) {
  static const std::map<std::string, Experiment> names = {
      {"run", Experiment::run},
      {"convergence-time", Experiment::convergence_time},
      {"convergence-space", Experiment::convergence_space},
      {"conservation", Experiment::conservation},
      {"oracle-verify", Experiment::oracle_verify},
  };
  auto it = names.find(name);
  if (it == names.end()) {
    throw ConfigError("unknown experiment '" + name + "'");
  }
  return it->second;
}

std::string to_string(Experiment experiment) {
  switch (experiment) {
  case Experiment::run:
    return "run";
  case Experiment::convergence_time:
    return "convergence-time";
  case Experiment::convergence_space:
    return "convergence-space";
  case Experiment::conservation:
    return "conservation";
  case Experiment::oracle_verify:
    return "oracle-verify";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double to_double(const std::string &key, const std::string &value) {
  double out = 0.0;
  std::string_view text = value;
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(out)) {
    throw ConfigError("key '" + key + "': '" + value + "' is not a finite number");
  }
  return out;
}

std::size_t to_count(const std::string &key, const std::string &value) {
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("key '" + key + "': '" + value + "' is not a nonnegative integer");
  }
  return out;
}

bool to_bool(const std::string &key, const std::string &value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw ConfigError("key '" + key + "': '" + value + "' is not a boolean");
}

std::vector<std::string> split_list(const std::string &value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    items.push_back(trim(item));
  }
  return items;
}

template <typename T> void require_strictly_monotone(const std::vector<T> &v, const char *key) {
  if (v.size() < 2) {
    return;
  }
  const bool increasing = std::adjacent_find(v.begin(), v.end(), std::greater_equal<>{}) == v.end();
  const bool decreasing = std::adjacent_find(v.begin(), v.end(), std::less_equal<>{}) == v.end();
  if (!increasing && !decreasing) {
    throw ConfigError(std::string(key) + " must be strictly monotone");
  }
}

} // namespace

std::size_t ExperimentConfig::steps_for(double step) const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ConfigError("tau must be positive");
  }
  const double ratio = horizon / step;
  const double rounded = std::round(ratio);
  if (rounded < 1.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw ConfigError("T / tau must be a positive integer (T = " + std::to_string(horizon) +
                      ", tau = " + std::to_string(step) + ")");
  }
  const auto steps = static_cast<std::size_t>(rounded);
  return step_count == StepCount::inclusive ? steps + 1 : steps;
}

void ExperimentConfig::validate() const {
  if (n < 4 || n % 2 != 0) {
    throw ConfigError("N must be even and >= 4");
  }
  if (!(problem.b > problem.a)) {
    throw ConfigError("domain_a must be smaller than domain_b");
  }
  if (!(fp_tolerance >= 1e-15)) {
    throw ConfigError("fp_tolerance must be >= 1e-15");
  }
  if (fp_max_iters == 0) {
    throw ConfigError("fp_max_iters must be >= 1");
  }
  if (workers == 0) {
    throw ConfigError("workers must be >= 1");
  }
  if (experiment == Experiment::oracle_verify) {
    return;
  }
  if (!(problem.alpha > 1.0 && problem.alpha <= 2.0)) {
    throw ConfigError("alpha must lie in (1, 2]");
  }
  if (!(horizon > 0.0)) {
    throw ConfigError("T must be positive");
  }
  if (problem.kind == ProblemKind::custom && problem.initial_data.empty()) {
    throw ConfigError("problem = custom needs initial_data");
  }

  auto check_resolved = [&](std::size_t nodes) {
    if (nodes < 4 || nodes % 2 != 0) {
      throw ConfigError("N must be even and >= 4, got " + std::to_string(nodes));
    }
    if (problem.kind == ProblemKind::plane_wave) {
      const double lambda = problem.parameter("lambda", 4.0);
      if (lambda != std::round(lambda)) {
        throw ConfigError("lambda must be an integer");
      }
      const double mu = 2.0 * std::numbers::pi / (problem.b - problem.a);
      if (std::abs(lambda / mu) >= static_cast<double>(nodes / 2)) {
        throw ConfigError("plane wave mode lambda = " + std::to_string(static_cast<long>(lambda)) +
                          " is not resolved on N = " + std::to_string(nodes));
      }
    }
  };

  switch (experiment) {
  case Experiment::convergence_time:
    if (sweep_tau.empty()) {
      throw ConfigError("convergence-time needs sweep_tau");
    }
    require_strictly_monotone(sweep_tau, "sweep_tau");
    for (double t : sweep_tau) {
      (void)steps_for(t);
    }
    check_resolved(n);
    if (problem.kind != ProblemKind::plane_wave) {
      throw ConfigError("convergence experiments need problem = plane_wave");
    }
    break;
  case Experiment::convergence_space:
    if (sweep_n.empty()) {
      throw ConfigError("convergence-space needs sweep_N");
    }
    require_strictly_monotone(sweep_n, "sweep_N");
    for (std::size_t nodes : sweep_n) {
      check_resolved(nodes);
    }
    (void)steps_for(tau);
    if (problem.kind != ProblemKind::plane_wave) {
      throw ConfigError("convergence experiments need problem = plane_wave");
    }
    break;
  default:
    check_resolved(n);
    (void)steps_for(tau);
    break;
  }
}

ExperimentConfig parse_config(std::istream &in, const std::filesystem::path &base_dir) {
  ExperimentConfig cfg;
  auto resolve = [&](const std::string &value) {
    std::filesystem::path p(value);
    return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  };

  bool domain_given = false;
  bool beta_given = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (value.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty value for '" + key + "'");
    }

    if (key == "problem") {
      try {
        cfg.problem.kind = parse_problem_kind(value);
      } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
      }
    } else if (key == "alpha") {
      cfg.problem.alpha = to_double(key, value);
    } else if (key == "beta") {
      cfg.problem.beta = to_double(key, value);
      beta_given = true;
    } else if (key == "domain_a") {
      cfg.problem.a = to_double(key, value);
      domain_given = true;
    } else if (key == "domain_b") {
      cfg.problem.b = to_double(key, value);
      domain_given = true;
    } else if (key == "N") {
      cfg.n = to_count(key, value);
    } else if (key == "tau") {
      cfg.tau = to_double(key, value);
    } else if (key == "T") {
      cfg.horizon = to_double(key, value);
    } else if (key == "A" || key == "lambda") {
      cfg.problem.parameters[key] = to_double(key, value);
    } else if (key == "fp_tolerance") {
      cfg.fp_tolerance = to_double(key, value);
    } else if (key == "fp_max_iters") {
      cfg.fp_max_iters = to_count(key, value);
    } else if (key == "output") {
      cfg.output = resolve(value);
    } else if (key == "oracle_mode") {
      cfg.oracle_mode = to_bool(key, value);
    } else if (key == "snapshot_stride") {
      cfg.snapshot_stride = to_count(key, value);
    } else if (key == "sweep_tau") {
      cfg.sweep_tau.clear();
      for (const auto &item : split_list(value)) {
        cfg.sweep_tau.push_back(to_double(key, item));
      }
    } else if (key == "sweep_N") {
      cfg.sweep_n.clear();
      for (const auto &item : split_list(value)) {
        cfg.sweep_n.push_back(to_count(key, item));
      }
    } else if (key == "initial_data") {
      cfg.problem.initial_data = resolve(value);
    } else if (key == "step_count") {
      if (value == "exact") {
        cfg.step_count = StepCount::exact;
      } else if (value == "inclusive") {
        cfg.step_count = StepCount::inclusive;
      } else {
        throw ConfigError("step_count must be 'exact' or 'inclusive'");
      }
    } else if (key == "workers") {
      cfg.workers = to_count(key, value);
    } else if (key == "seed") {
      cfg.seed = to_count(key, value);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  // The soliton example lives on [-20, 20] with a focusing cubic term.
  if (cfg.problem.kind == ProblemKind::soliton) {
    if (!domain_given) {
      cfg.problem.a = -20.0;
      cfg.problem.b = 20.0;
    }
    if (!beta_given) {
      cfg.problem.beta = 1.0;
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path.string() + "'");
  }
  return parse_config(in, path.parent_path());
}

} // namespace fnls
