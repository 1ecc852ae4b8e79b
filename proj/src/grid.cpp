#include "fnls/grid.hpp"

#include "fft_plan.hpp"
#include "fnls/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fnls {

namespace {

std::shared_ptr<const std::vector<cplx>> make_shift_phases(double a, double b, std::size_t n) {
  auto phases = std::make_shared<std::vector<cplx>>(n, cplx{1.0, 0.0});
  if (a != 0.0) {
    // k mu a = 2 pi k a / L; reduce k a / L mod 1 before scaling by 2 pi.
    const double ratio = a / (b - a);
    const long half = static_cast<long>(n / 2);
    for (std::size_t s = 0; s < n; ++s) {
      const long k = static_cast<long>(s) - half;
      double turns = std::fmod(static_cast<double>(k) * ratio, 1.0);
      (*phases)[s] = std::polar(1.0, -2.0 * std::numbers::pi * turns);
    }
  }
  return phases;
}

} // namespace

GridSpec::GridSpec(double a, double b, std::size_t n, TransformPath path)
    : a_(a), b_(b), n_(n), path_(path) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
    throw std::invalid_argument("grid: domain must satisfy a < b with finite endpoints");
  }
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("grid: node count must be even and >= 4, got " + std::to_string(n));
  }
  phases_ = make_shift_phases(a, b, n);
  if (path_ == TransformPath::fast) {
    plan_ = detail::make_fft_plan(n);
  }
}

double GridSpec::mu() const noexcept { return 2.0 * std::numbers::pi / (b_ - a_); }

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    x[j] = node(j);
  }
  return x;
}

std::vector<long> GridSpec::wavenumbers() const {
  std::vector<long> k(n_);
  for (std::size_t s = 0; s < n_; ++s) {
    k[s] = wavenumber(s);
  }
  return k;
}

GridSpec GridSpec::with_path(TransformPath path) const {
  if (path == path_) {
    return *this;
  }
  GridSpec copy = *this;
  copy.path_ = path;
  copy.plan_ = path == TransformPath::fast ? detail::make_fft_plan(n_) : nullptr;
  return copy;
}

void require_same_grid(const GridSpec &lhs, const GridSpec &rhs, const char *what) {
  if (!lhs.same_grid(rhs)) {
    throw std::invalid_argument(std::string(what) + ": grid mismatch");
  }
}

GridFunction::GridFunction(GridSpec spec, std::vector<cplx> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
  if (values_.size() != spec_.size()) {
    throw std::invalid_argument("GridFunction: expected " + std::to_string(spec_.size()) +
                                " values, got " + std::to_string(values_.size()));
  }
  for (const auto &v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("GridFunction: non-finite sample");
    }
  }
}

GridFunction GridFunction::zeros(const GridSpec &spec) { return constant(spec, cplx{}); }

GridFunction GridFunction::constant(const GridSpec &spec, cplx value) {
  return GridFunction(spec, std::vector<cplx>(spec.size(), value));
}

GridFunction GridFunction::operator+(const GridFunction &other) const {
  require_same_grid(spec_, other.spec_, "GridFunction::operator+");
  std::vector<cplx> out(values_.size());
  std::transform(values_.begin(), values_.end(), other.values_.begin(), out.begin(), std::plus<>{});
  return GridFunction(spec_, std::move(out));
}

GridFunction GridFunction::operator-(const GridFunction &other) const {
  require_same_grid(spec_, other.spec_, "GridFunction::operator-");
  std::vector<cplx> out(values_.size());
  std::transform(values_.begin(), values_.end(), other.values_.begin(), out.begin(), std::minus<>{});
  return GridFunction(spec_, std::move(out));
}

GridFunction GridFunction::operator*(cplx scale) const {
  std::vector<cplx> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [scale](cplx v) { return v * scale; });
  return GridFunction(spec_, std::move(out));
}

SpectrumFunction::SpectrumFunction(GridSpec spec, std::vector<cplx> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != spec_.size()) {
    throw std::invalid_argument("SpectrumFunction: expected " + std::to_string(spec_.size()) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

const cplx &SpectrumFunction::at_wavenumber(long k) const {
  const long half = static_cast<long>(spec_.size() / 2);
  if (k < -half || k >= half) {
    throw std::out_of_range("SpectrumFunction: wavenumber " + std::to_string(k) + " outside [-N/2, N/2)");
  }
  return coeffs_[spec_.slot(k)];
}

SpectrumFunction forward_dft(const GridFunction &u) {
  std::vector<cplx> coeffs(u.size());
  forward_transform(u.spec(), u.values(), coeffs);
  return SpectrumFunction(u.spec(), std::move(coeffs));
}

GridFunction inverse_dft(const SpectrumFunction &s) {
  std::vector<cplx> values(s.size());
  inverse_transform(s.spec(), s.coeffs(), values);
  return GridFunction(s.spec(), std::move(values));
}

cplx inner_product(const GridFunction &u, const GridFunction &v) {
  require_same_grid(u.spec(), v.spec(), "inner_product");
  cplx sum{};
  for (std::size_t j = 0; j < u.size(); ++j) {
    sum += u[j] * std::conj(v[j]);
  }
  return sum / static_cast<double>(u.size());
}

double norm_l2(const GridFunction &u) { return std::sqrt(inner_product(u, u).real()); }

double norm_lp(const GridFunction &u, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("norm_lp: p must be finite and >= 1");
  }
  double sum = 0.0;
  for (const auto &v : u.values()) {
    sum += std::pow(std::abs(v), p);
  }
  return std::pow(sum / static_cast<double>(u.size()), 1.0 / p);
}

double norm_linf(const GridFunction &u) {
  double m = 0.0;
  for (const auto &v : u.values()) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

} // namespace fnls
