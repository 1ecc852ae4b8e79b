#include "fnls/reference.hpp"

#include <cmath>
#include <numbers>

namespace fnls::reference {

namespace {

// exp(2 pi i * turns), turns reduced into [0, 1) first.
cplx turn(double turns) {
  turns -= std::floor(turns);
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

// Index-space phase e^{2 pi i j k / N} with j k reduced modulo N exactly.
cplx index_mode(long k, std::size_t j, std::size_t n) {
  const long nn = static_cast<long>(n);
  long r = (k * static_cast<long>(j)) % nn;
  if (r < 0) {
    r += nn;
  }
  return turn(static_cast<double>(r) / static_cast<double>(n));
}

} // namespace

cplx mode(const GridSpec &spec, long k, std::size_t j) {
  // k mu x_j = 2 pi (k a / L + j k / N)
  const double shift = std::fmod(static_cast<double>(k) * (spec.a() / spec.length()), 1.0);
  return index_mode(k, j, spec.size()) * turn(shift);
}

void forward_sum(const GridSpec &spec, std::span<const cplx> values, std::span<cplx> coeffs) {
  const std::size_t n = spec.size();
  for (std::size_t s = 0; s < n; ++s) {
    const long k = spec.wavenumber(s);
    cplx sum{};
    for (std::size_t j = 0; j < n; ++j) {
      sum += values[j] * std::conj(mode(spec, k, j));
    }
    coeffs[s] = sum / static_cast<double>(n);
  }
}

void inverse_sum(const GridSpec &spec, std::span<const cplx> coeffs, std::span<cplx> values) {
  const std::size_t n = spec.size();
  for (std::size_t j = 0; j < n; ++j) {
    cplx sum{};
    for (std::size_t s = 0; s < n; ++s) {
      sum += coeffs[s] * mode(spec, spec.wavenumber(s), j);
    }
    values[j] = sum;
  }
}

std::vector<cplx> fractional_laplacian_sum(const GridSpec &spec, double alpha, std::span<const cplx> values) {
  const std::size_t n = spec.size();
  const long half = static_cast<long>(n / 2);
  std::vector<cplx> index_coeffs(n);
  for (long p = -half; p < half; ++p) {
    cplx sum{};
    for (std::size_t j = 0; j < n; ++j) {
      sum += values[j] * std::conj(index_mode(p, j, n));
    }
    index_coeffs[static_cast<std::size_t>(p + half)] = sum / static_cast<double>(n);
  }
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx sum{};
    for (long p = -half; p < half; ++p) {
      const double d = p == 0 ? 0.0 : std::pow(std::abs(spec.mu() * static_cast<double>(p)), alpha);
      sum += d * index_coeffs[static_cast<std::size_t>(p + half)] * index_mode(p, k, n);
    }
    out[k] = sum;
  }
  return out;
}

} // namespace fnls::reference
