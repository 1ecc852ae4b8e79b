#pragma once

// Direct O(N^2) summations of the defining formulas. These back
// TransformPath::naive and the oracle-verify battery; nothing here touches
// FFTW.

#include "fnls/grid.hpp"

#include <span>
#include <vector>

namespace fnls::reference {

/// e^{i k mu x_j} evaluated with the phase reduced modulo 2*pi before the
/// exponential, so large k*mu*x_j does not lose digits.
cplx mode(const GridSpec &spec, long k, std::size_t j);

void forward_sum(const GridSpec &spec, std::span<const cplx> values, std::span<cplx> coeffs);
void inverse_sum(const GridSpec &spec, std::span<const cplx> coeffs, std::span<cplx> values);

/// (D_alpha U)_k = sum_p d_p ((1/N) sum_j U_j e^{-2 pi i j p / N}) e^{2 pi i p k / N}
/// with d_p = |mu p|^alpha, as a double sum in index space.
std::vector<cplx> fractional_laplacian_sum(const GridSpec &spec, double alpha,
                                           std::span<const cplx> values);

} // namespace fnls::reference
