#pragma once

#include "fnls/grid.hpp"

#include <span>
#include <vector>

namespace fnls {

/// Diagonal multiplier d_k = |mu k|^alpha of the discrete fractional
/// Laplacian D_alpha = F^{-1} diag(d) F, stored in natural wavenumber order.
///
/// Any alpha in [0, 2] is accepted so that half-order operators D_{alpha/2}
/// can be formed; the time stepper itself requires alpha in (1, 2].
class FractionalSymbol {
public:
  FractionalSymbol(GridSpec spec, double alpha);

  const GridSpec &spec() const noexcept { return spec_; }
  double alpha() const noexcept { return alpha_; }
  std::span<const double> multipliers() const noexcept { return d_; }
  double multiplier(long k) const { return d_[spec_.slot(k)]; }

  /// Copy with an explicit multiplier table. Only meant for fault-injection
  /// checks of the verification battery.
  FractionalSymbol with_multipliers(std::vector<double> d) const;

private:
  GridSpec spec_;
  double alpha_;
  std::vector<double> d_;
};

/// D_alpha u computed as inverse_dft(d * forward_dft(u)).
GridFunction apply_fractional_laplacian(const FractionalSymbol &sym, const GridFunction &u);

/// |u|_{H^sigma_h} = (sum_k |mu k|^{2 sigma} |u_k|^2)^{1/2}, sigma in [0, 1].
double seminorm_sobolev(const GridFunction &u, double sigma);

/// ||u||_{H^sigma_h} = (||u||_h^2 + |u|_{H^sigma_h}^2)^{1/2}.
double norm_sobolev(const GridFunction &u, double sigma);

/// Constant of the discrete uniform Sobolev inequality,
/// (sum_k 1 / (1 + |mu k|^{2 sigma}))^{1/2}, for sigma in (1/2, 1]; it
/// satisfies ||u||_inf <= C ||u||_{H^sigma_h}.
double sobolev_embedding_constant(const GridSpec &spec, double sigma);

/// Right-hand side of the interpolation inequality with constant 2:
/// 2 ||u||_{H^sigma}^{sigma0/sigma} ||u||_h^{1 - sigma0/sigma}.
/// Requires 0 <= sigma0 <= sigma <= 1, sigma > 0.
double interpolation_bound(const GridFunction &u, double sigma0, double sigma);

/// Both sides of the discrete Hausdorff-Young inequality for exponent
/// q in [1, 2] and its conjugate p: lhs = (h sum_j |u_j|^p)^{1/p}
/// (max_j |u_j| when q == 1), rhs = (sum_k |u_k|^q)^{1/q}.
struct HausdorffYoung {
  double lhs;
  double rhs;
};
HausdorffYoung hausdorff_young(const GridFunction &u, double q);

} // namespace fnls
