#pragma once

// Test-only reference computations written straight from the defining sums.
// They deliberately share no code with the library's transform paths.

#include "fnls/grid.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace fnls::test {

inline std::vector<cplx> random_values(std::size_t n, std::mt19937_64 &rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<cplx> v(n);
  for (auto &x : v) {
    x = {normal(rng), normal(rng)};
  }
  return v;
}

inline GridFunction random_function(const GridSpec &spec, std::mt19937_64 &rng, double scale = 1.0) {
  return GridFunction(spec, random_values(spec.size(), rng, scale));
}

/// coeff[k + N/2] = (1/N) sum_j u_j exp(-i k mu x_j)
inline std::vector<cplx> direct_forward(const GridSpec &spec, std::span<const cplx> u) {
  const long n = static_cast<long>(spec.size());
  std::vector<cplx> out(spec.size());
  for (long k = -n / 2; k < n / 2; ++k) {
    cplx sum{};
    for (long j = 0; j < n; ++j) {
      const double x = spec.a() + static_cast<double>(j) * spec.h();
      sum += u[static_cast<std::size_t>(j)] * std::exp(cplx{0.0, -static_cast<double>(k) * spec.mu() * x});
    }
    out[static_cast<std::size_t>(k + n / 2)] = sum / static_cast<double>(n);
  }
  return out;
}

/// u_j = sum_k c_k exp(i k mu x_j)
inline std::vector<cplx> direct_inverse(const GridSpec &spec, std::span<const cplx> c) {
  const long n = static_cast<long>(spec.size());
  std::vector<cplx> out(spec.size());
  for (long j = 0; j < n; ++j) {
    const double x = spec.a() + static_cast<double>(j) * spec.h();
    cplx sum{};
    for (long k = -n / 2; k < n / 2; ++k) {
      sum += c[static_cast<std::size_t>(k + n / 2)] * std::exp(cplx{0.0, static_cast<double>(k) * spec.mu() * x});
    }
    out[static_cast<std::size_t>(j)] = sum;
  }
  return out;
}

/// Index-space double sum of the discrete fractional Laplacian.
inline std::vector<cplx> direct_fractional_laplacian(const GridSpec &spec, double alpha, std::span<const cplx> u) {
  const long n = static_cast<long>(spec.size());
  const double two_pi = 2.0 * std::acos(-1.0);
  std::vector<cplx> out(spec.size());
  for (long k = 0; k < n; ++k) {
    cplx outer{};
    for (long p = -n / 2; p < n / 2; ++p) {
      const double d = p == 0 ? 0.0 : std::pow(std::abs(spec.mu() * static_cast<double>(p)), alpha);
      cplx inner{};
      for (long j = 0; j < n; ++j) {
        inner += u[static_cast<std::size_t>(j)] *
                 std::exp(cplx{0.0, -two_pi * static_cast<double>(j * p) / static_cast<double>(n)});
      }
      inner /= static_cast<double>(n);
      outer += d * inner * std::exp(cplx{0.0, two_pi * static_cast<double>(p * k) / static_cast<double>(n)});
    }
    out[static_cast<std::size_t>(k)] = outer;
  }
  return out;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

inline double max_abs(std::span<const cplx> a) {
  double m = 0.0;
  for (const auto &v : a) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

} // namespace fnls::test
