#include "fnls/problems.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace fnls {

ProblemKind parse_problem_kind(const std::string &name) {
  if (name == "plane_wave") {
    return ProblemKind::plane_wave;
  }
  if (name == "soliton") {
    return ProblemKind::soliton;
  }
  if (name == "custom") {
    return ProblemKind::custom;
  }
  throw std::invalid_argument("unknown problem '" + name + "' (expected plane_wave, soliton or custom)");
}

std::string to_string(ProblemKind kind) {
  switch (kind) {
  case ProblemKind::plane_wave:
    return "plane_wave";
  case ProblemKind::soliton:
    return "soliton";
  case ProblemKind::custom:
    return "custom";
  }
  return "unknown";
}

double ProblemSpec::parameter(const std::string &name, double fallback) const {
  auto it = parameters.find(name);
  return it == parameters.end() ? fallback : it->second;
}

double plane_wave_frequency(double amplitude, long lambda, double alpha, double beta) {
  return std::pow(std::abs(static_cast<double>(lambda)), alpha) - beta * amplitude * amplitude;
}

GridFunction plane_wave_exact(const GridSpec &spec, double t, double amplitude, long lambda, double alpha,
                              double beta) {
  // lambda must equal mu * m for an integer harmonic m with |m| < N/2.
  const double harmonic = static_cast<double>(lambda) / spec.mu();
  const double rounded = std::round(harmonic);
  if (std::abs(harmonic - rounded) > 1e-9 * std::max(1.0, std::abs(harmonic))) {
    throw std::invalid_argument("plane_wave: lambda is not a harmonic of the domain");
  }
  if (std::abs(rounded) >= static_cast<double>(spec.size() / 2)) {
    throw std::invalid_argument("plane_wave: mode lambda is not resolved (need |lambda/mu| < N/2)");
  }
  const double omega = plane_wave_frequency(amplitude, lambda, alpha, beta);
  std::vector<cplx> values(spec.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    values[j] = amplitude * std::polar(1.0, static_cast<double>(lambda) * spec.node(j) - omega * t);
  }
  return GridFunction(spec, std::move(values));
}

GridFunction soliton_initial(const GridSpec &spec) {
  std::vector<cplx> values(spec.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double x = spec.node(j);
    values[j] = std::polar(1.0 / std::cosh(std::sqrt(2.0) * x / 2.0), x / 2.0);
  }
  return GridFunction(spec, std::move(values));
}

namespace {

bool parse_double(std::string_view text, double &out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') {
    text.remove_prefix(1);
  }
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

} // namespace

GridFunction read_initial_data(const GridSpec &spec, const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open initial data file '" + path.string() + "'");
  }
  std::vector<cplx> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    const auto comma = line.find(',');
    double re = 0.0;
    double im = 0.0;
    const bool ok = comma != std::string::npos && parse_double(std::string_view(line).substr(0, comma), re) &&
                    parse_double(std::string_view(line).substr(comma + 1), im);
    if (!ok) {
      if (line_no == 1 && values.empty()) {
        continue; // header
      }
      throw std::invalid_argument("initial data line " + std::to_string(line_no) + ": expected 're,im'");
    }
    values.emplace_back(re, im);
  }
  if (values.size() != spec.size()) {
    throw std::invalid_argument("initial data has " + std::to_string(values.size()) + " rows, grid has " +
                                std::to_string(spec.size()) + " nodes");
  }
  return GridFunction(spec, std::move(values));
}

GridFunction initial_condition(const ProblemSpec &problem, const GridSpec &spec) {
  switch (problem.kind) {
  case ProblemKind::plane_wave: {
    const double lambda = problem.parameter("lambda", 4.0);
    if (lambda != std::round(lambda)) {
      throw std::invalid_argument("plane_wave: lambda must be an integer");
    }
    return plane_wave_exact(spec, 0.0, problem.parameter("A", 1.0), static_cast<long>(lambda), problem.alpha,
                            problem.beta);
  }
  case ProblemKind::soliton:
    return soliton_initial(spec);
  case ProblemKind::custom:
    return read_initial_data(spec, problem.initial_data);
  }
  throw std::invalid_argument("unknown problem kind");
}

ErrorNorms error_norms(const GridFunction &numeric, const GridFunction &exact) {
  require_same_grid(numeric.spec(), exact.spec(), "error_norms");
  const GridFunction diff = numeric - exact;
  return {norm_linf(diff), std::sqrt(numeric.spec().length()) * norm_l2(diff)};
}

} // namespace fnls
