#ifndef ETOMO_FFT_HPP
#define ETOMO_FFT_HPP

#include "etomo/grid.hpp"

#include <complex>
#include <vector>

namespace etomo {

using ComplexArray = std::vector<std::complex<double>>;

// Forward DFT of one real component over the grid (row-major layout,
// no normalization). With the convention fhat(p) = integral f(x) e^{-i x p},
// differentiation acts on these bins as multiplication by i p.
ComplexArray fft_forward(const Grid& grid, const Eigen::ArrayXd& real);

// Inverse DFT (scaled by 1/N); returns the real part and, if requested,
// the largest imaginary residue relative to the output magnitude.
Eigen::ArrayXd fft_inverse_real(const Grid& grid, const ComplexArray& bins,
                                double* imag_residual = nullptr);

ComplexArray fft_inverse(const Grid& grid, const ComplexArray& bins);

// Angular frequency of DFT bin k along one axis (negative branch above
// the Nyquist index): p = 2 pi ktilde / extent.
double bin_frequency(const Grid& grid, int axis, int k);

// Frequency vector of a flat bin index.
Eigen::VectorXd bin_frequency_vector(const Grid& grid, std::int64_t flat);

} // namespace etomo

#endif
