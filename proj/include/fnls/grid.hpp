#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace fnls {

using cplx = std::complex<double>;

/// Which discrete Fourier transform implementation a grid routes through.
/// `naive` is the O(N^2) direct summation used for verification runs.
enum class TransformPath { fast, naive };

namespace detail {
struct FftPlan;
}

/// Uniform periodic grid on [a, b) with N nodes x_j = a + j h.
///
/// Wavenumbers are k = -N/2, ..., N/2 - 1. Every spectral array in the
/// library is stored in this natural order: slot s holds wavenumber
/// k = s - N/2. The fast backend works in FFTW's native order (index
/// m = k mod N); the mapping between the two is kept inside transform.cpp.
///
/// GridSpec is a cheap-to-copy immutable value. The transform plan and the
/// node phase table are shared between copies and never mutated.
class GridSpec {
public:
  GridSpec(double a, double b, std::size_t n, TransformPath path = TransformPath::fast);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t size() const noexcept { return n_; }
  double length() const noexcept { return b_ - a_; }
  double h() const noexcept { return (b_ - a_) / static_cast<double>(n_); }
  /// Fundamental wavenumber 2*pi / (b - a).
  double mu() const noexcept;
  TransformPath path() const noexcept { return path_; }

  double node(std::size_t j) const noexcept { return a_ + static_cast<double>(j) * h(); }
  std::vector<double> nodes() const;

  long wavenumber(std::size_t slot) const noexcept {
    return static_cast<long>(slot) - static_cast<long>(n_ / 2);
  }
  std::size_t slot(long k) const noexcept { return static_cast<std::size_t>(k + static_cast<long>(n_ / 2)); }
  std::vector<long> wavenumbers() const;

  /// Same geometry and node count; the transform path may differ.
  bool same_grid(const GridSpec &other) const noexcept {
    return a_ == other.a_ && b_ == other.b_ && n_ == other.n_;
  }

  /// The same grid routed through another transform path.
  GridSpec with_path(TransformPath path) const;

  /// e^{-i k mu a} for each slot; identity phases when a == 0.
  std::span<const cplx> shift_phases() const noexcept { return *phases_; }
  const detail::FftPlan *plan() const noexcept { return plan_.get(); }

private:
  double a_;
  double b_;
  std::size_t n_;
  TransformPath path_;
  std::shared_ptr<const std::vector<cplx>> phases_;
  std::shared_ptr<const detail::FftPlan> plan_;
};

/// Complex samples u_j = u(x_j) on a grid.
class GridFunction {
public:
  GridFunction(GridSpec spec, std::vector<cplx> values);
  static GridFunction zeros(const GridSpec &spec);
  static GridFunction constant(const GridSpec &spec, cplx value);

  const GridSpec &spec() const noexcept { return spec_; }
  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx &operator[](std::size_t j) const { return values_[j]; }

  GridFunction operator+(const GridFunction &other) const;
  GridFunction operator-(const GridFunction &other) const;
  GridFunction operator*(cplx scale) const;

private:
  GridSpec spec_;
  std::vector<cplx> values_;
};

/// Fourier coefficients in natural order k = -N/2, ..., N/2 - 1.
class SpectrumFunction {
public:
  SpectrumFunction(GridSpec spec, std::vector<cplx> coeffs);

  const GridSpec &spec() const noexcept { return spec_; }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const cplx &at_wavenumber(long k) const;

private:
  GridSpec spec_;
  std::vector<cplx> coeffs_;
};

/// Throws std::invalid_argument unless both functions live on the same grid.
void require_same_grid(const GridSpec &lhs, const GridSpec &rhs, const char *what);

SpectrumFunction forward_dft(const GridFunction &u);
GridFunction inverse_dft(const SpectrumFunction &s);

/// (u, v)_h = (1/N) sum_j u_j conj(v_j)
cplx inner_product(const GridFunction &u, const GridFunction &v);
double norm_l2(const GridFunction &u);
/// ((1/N) sum_j |u_j|^p)^{1/p}, p >= 1.
double norm_lp(const GridFunction &u, double p);
double norm_linf(const GridFunction &u);

} // namespace fnls
