#pragma once

#include "fnls/grid.hpp"

#include <span>

namespace fnls {

// Span-level transforms used by the time stepper to avoid per-sweep
// allocations. Both follow the normalization of forward_dft/inverse_dft and
// dispatch on spec.path(). Input and output must have length spec.size()
// and must not alias.

/// coeffs[s] = (1/N) sum_j values[j] e^{-i k mu x_j}, k = s - N/2.
void forward_transform(const GridSpec &spec, std::span<const cplx> values, std::span<cplx> coeffs);

/// values[j] = sum_s coeffs[s] e^{i k mu x_j}, k = s - N/2.
void inverse_transform(const GridSpec &spec, std::span<const cplx> coeffs, std::span<cplx> values);

} // namespace fnls
