#include "fnls/fractional.hpp"

#include "fnls/transform.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fnls {

namespace {

// |x|^e with 0^e = 0 for every e >= 0 (including e = 0, so d_0 stays 0).
double abs_pow(double x, double e) { return x == 0.0 ? 0.0 : std::pow(std::abs(x), e); }

void check_sigma(double sigma, const char *what) {
  if (!(sigma >= 0.0 && sigma <= 1.0)) {
    throw std::invalid_argument(std::string(what) + ": sigma must lie in [0, 1]");
  }
}

// sum_k |mu k|^{2 sigma} |u_k|^2. The k = 0 weight is 0^{2 sigma}, which is
// 1 at sigma = 0 so that |u|_{H^0_h} = ||u||_h.
double weighted_energy(const GridFunction &u, double sigma) {
  const auto &spec = u.spec();
  std::vector<cplx> coeffs(spec.size());
  forward_transform(spec, u.values(), coeffs);
  double sum = 0.0;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    const double weight = std::pow(std::abs(spec.mu() * static_cast<double>(spec.wavenumber(s))), 2.0 * sigma);
    sum += weight * std::norm(coeffs[s]);
  }
  return sum;
}

} // namespace

FractionalSymbol::FractionalSymbol(GridSpec spec, double alpha) : spec_(std::move(spec)), alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 2.0)) {
    throw std::invalid_argument("FractionalSymbol: alpha must lie in [0, 2]");
  }
  d_.resize(spec_.size());
  for (std::size_t s = 0; s < d_.size(); ++s) {
    d_[s] = abs_pow(spec_.mu() * static_cast<double>(spec_.wavenumber(s)), alpha_);
  }
}

FractionalSymbol FractionalSymbol::with_multipliers(std::vector<double> d) const {
  if (d.size() != d_.size()) {
    throw std::invalid_argument("FractionalSymbol: multiplier table has wrong length");
  }
  FractionalSymbol copy = *this;
  copy.d_ = std::move(d);
  return copy;
}

GridFunction apply_fractional_laplacian(const FractionalSymbol &sym, const GridFunction &u) {
  require_same_grid(sym.spec(), u.spec(), "apply_fractional_laplacian");
  const auto &spec = u.spec();
  std::vector<cplx> coeffs(spec.size());
  forward_transform(spec, u.values(), coeffs);
  const auto d = sym.multipliers();
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    coeffs[s] *= d[s];
  }
  std::vector<cplx> out(spec.size());
  inverse_transform(spec, coeffs, out);
  return GridFunction(spec, std::move(out));
}

double seminorm_sobolev(const GridFunction &u, double sigma) {
  check_sigma(sigma, "seminorm_sobolev");
  return std::sqrt(weighted_energy(u, sigma));
}

double norm_sobolev(const GridFunction &u, double sigma) {
  check_sigma(sigma, "norm_sobolev");
  const double l2 = norm_l2(u);
  return std::sqrt(l2 * l2 + weighted_energy(u, sigma));
}

double sobolev_embedding_constant(const GridSpec &spec, double sigma) {
  if (!(sigma > 0.5 && sigma <= 1.0)) {
    throw std::invalid_argument("sobolev_embedding_constant: sigma must lie in (1/2, 1]");
  }
  double sum = 0.0;
  for (long k : spec.wavenumbers()) {
    sum += 1.0 / (1.0 + abs_pow(spec.mu() * static_cast<double>(k), 2.0 * sigma));
  }
  return std::sqrt(sum);
}

double interpolation_bound(const GridFunction &u, double sigma0, double sigma) {
  if (!(sigma > 0.0 && sigma <= 1.0 && sigma0 >= 0.0 && sigma0 <= sigma)) {
    throw std::invalid_argument("interpolation_bound: need 0 <= sigma0 <= sigma <= 1 and sigma > 0");
  }
  const double theta = sigma0 / sigma;
  return 2.0 * std::pow(norm_sobolev(u, sigma), theta) * std::pow(norm_l2(u), 1.0 - theta);
}

HausdorffYoung hausdorff_young(const GridFunction &u, double q) {
  if (!(q >= 1.0 && q <= 2.0)) {
    throw std::invalid_argument("hausdorff_young: q must lie in [1, 2]");
  }
  const auto &spec = u.spec();
  std::vector<cplx> coeffs(spec.size());
  forward_transform(spec, u.values(), coeffs);

  double rhs = 0.0;
  for (const auto &c : coeffs) {
    rhs += std::pow(std::abs(c), q);
  }
  rhs = std::pow(rhs, 1.0 / q);

  double lhs = 0.0;
  if (q == 1.0) {
    lhs = norm_linf(u);
  } else {
    const double p = q / (q - 1.0);
    for (const auto &v : u.values()) {
      lhs += std::pow(std::abs(v), p);
    }
    lhs = std::pow(spec.h() * lhs, 1.0 / p);
  }
  return {lhs, rhs};
}

} // namespace fnls
