#include "fnls/transform.hpp"

#include "fft_plan.hpp"
#include "fnls/reference.hpp"

#include <algorithm>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace fnls {

namespace detail {

namespace {
// The FFTW planner is not re-entrant; only plan creation and destruction
// take this lock. Execution uses fftwl_execute_dft, which is thread-safe.
std::mutex &planner_mutex() {
  static std::mutex m;
  return m;
}
} // namespace

FftPlan::FftPlan(std::size_t size) : n(size) {
  std::lock_guard lock(planner_mutex());
  const int len = static_cast<int>(n);
  fftwl_complex *in = fftwl_alloc_complex(n);
  fftwl_complex *out = fftwl_alloc_complex(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward = fftwl_plan_dft_1d(len, in, out, FFTW_FORWARD, flags);
  backward = fftwl_plan_dft_1d(len, in, out, FFTW_BACKWARD, flags);
  fftwl_free(in);
  fftwl_free(out);
  if (forward == nullptr || backward == nullptr) {
    throw std::runtime_error("fftw: plan creation failed");
  }
}

FftPlan::~FftPlan() {
  std::lock_guard lock(planner_mutex());
  fftwl_destroy_plan(forward);
  fftwl_destroy_plan(backward);
}

std::shared_ptr<const FftPlan> make_fft_plan(std::size_t n) { return std::make_shared<const FftPlan>(n); }

} // namespace detail

namespace {

void check_lengths(const GridSpec &spec, std::size_t in, std::size_t out, const char *what) {
  if (in != spec.size() || out != spec.size()) {
    throw std::invalid_argument(std::string(what) + ": length mismatch with grid");
  }
}

using xcplx = std::complex<long double>;

fftwl_complex *as_fftw(xcplx *p) { return reinterpret_cast<fftwl_complex *>(p); }

struct Scratch {
  std::vector<xcplx> in;
  std::vector<xcplx> out;
};

Scratch &scratch(std::size_t n) {
  thread_local Scratch buffers;
  buffers.in.resize(n);
  buffers.out.resize(n);
  return buffers;
}

} // namespace

void forward_transform(const GridSpec &spec, std::span<const cplx> values, std::span<cplx> coeffs) {
  check_lengths(spec, values.size(), coeffs.size(), "forward_transform");
  if (spec.path() == TransformPath::naive) {
    reference::forward_sum(spec, values, coeffs);
    return;
  }
  const std::size_t n = spec.size();
  const std::size_t half = n / 2;
  // FFTW index m holds wavenumber k = m (m < N/2) or m - N (m >= N/2); the
  // natural-order slot is s = k + N/2, i.e. a cyclic shift by N/2.
  auto &buf = scratch(n);
  std::copy(values.begin(), values.end(), buf.in.begin());
  fftwl_execute_dft(spec.plan()->forward, as_fftw(buf.in.data()), as_fftw(buf.out.data()));
  const auto phases = spec.shift_phases();
  const long double scale = 1.0L / static_cast<long double>(n);
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t m = (s + half) % n;
    coeffs[s] = cplx(buf.out[m] * scale * xcplx(phases[s]));
  }
}

void inverse_transform(const GridSpec &spec, std::span<const cplx> coeffs, std::span<cplx> values) {
  check_lengths(spec, coeffs.size(), values.size(), "inverse_transform");
  if (spec.path() == TransformPath::naive) {
    reference::inverse_sum(spec, coeffs, values);
    return;
  }
  const std::size_t n = spec.size();
  const std::size_t half = n / 2;
  auto &buf = scratch(n);
  const auto phases = spec.shift_phases();
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t m = (s + half) % n;
    buf.in[m] = xcplx(coeffs[s]) * xcplx(std::conj(phases[s]));
  }
  fftwl_execute_dft(spec.plan()->backward, as_fftw(buf.in.data()), as_fftw(buf.out.data()));
  std::transform(buf.out.begin(), buf.out.end(), values.begin(), [](const xcplx &z) { return cplx(z); });
}

} // namespace fnls
