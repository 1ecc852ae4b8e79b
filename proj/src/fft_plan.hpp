#pragma once

#include <cstddef>
#include <memory>

#include <fftw3.h>

namespace fnls::detail {

/// Out-of-place complex FFTW plans for one transform length, in extended
/// (long double) precision: a double-precision round trip loses about one
/// ulp of mass per call in a consistent direction, which shows up as drift
/// over long runs. Plans are created with FFTW_UNALIGNED so they can be
/// executed on any buffer through the new-array interface, which is safe to
/// call concurrently.
struct FftPlan {
  explicit FftPlan(std::size_t n);
  ~FftPlan();
  FftPlan(const FftPlan &) = delete;
  FftPlan &operator=(const FftPlan &) = delete;

  std::size_t n;
  fftwl_plan forward;
  fftwl_plan backward;
};

std::shared_ptr<const FftPlan> make_fft_plan(std::size_t n);

} // namespace fnls::detail
