#pragma once

#include "fnls/grid.hpp"

#include <filesystem>
#include <map>
#include <numbers>
#include <string>

namespace fnls {

enum class ProblemKind { plane_wave, soliton, custom };

ProblemKind parse_problem_kind(const std::string &name);
std::string to_string(ProblemKind kind);

/// A built-in or file-supplied initial value problem.
struct ProblemSpec {
  ProblemKind kind = ProblemKind::plane_wave;
  double a = -std::numbers::pi;
  double b = std::numbers::pi;
  double alpha = 2.0;
  double beta = -2.0;
  /// Named parameters: "A" and "lambda" for plane_wave.
  std::map<std::string, double> parameters;
  /// Sampled initial data for custom problems.
  std::filesystem::path initial_data;

  double parameter(const std::string &name, double fallback) const;
};

/// A e^{i(lambda x_j - omega t)} with omega = |lambda|^alpha - beta |A|^2.
///
/// lambda is the wavenumber in physical units, so it has to be a grid
/// harmonic: lambda / mu must be an integer of magnitude < N/2.
GridFunction plane_wave_exact(const GridSpec &spec, double t, double amplitude, long lambda, double alpha,
                              double beta);

double plane_wave_frequency(double amplitude, long lambda, double alpha, double beta);

/// sech(sqrt(2) x / 2) e^{i x / 2} sampled at the grid nodes.
GridFunction soliton_initial(const GridSpec &spec);

/// Reads `re,im` rows (one per node, node order). A header line whose first
/// field is not numeric is skipped.
GridFunction read_initial_data(const GridSpec &spec, const std::filesystem::path &path);

/// Initial data of a problem on the given grid.
GridFunction initial_condition(const ProblemSpec &problem, const GridSpec &spec);

struct ErrorNorms {
  double linf;
  double l2;
};

/// linf = max_j |e_j|; l2 = (h sum_j |e_j|^2)^{1/2}, the quadrature
/// approximation of the continuous L2 norm, for e = numeric - exact.
ErrorNorms error_norms(const GridFunction &numeric, const GridFunction &exact);

} // namespace fnls
