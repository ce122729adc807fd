#pragma once

#include <complex>
#include <vector>

namespace bmoa {

using cplx = std::complex<double>;

/// In-place radix-2 FFT. `sign = -1` is the forward transform
/// X_k = sum_j a_j e^{-2*pi*i*j*k/N}, `sign = +1` the unnormalized inverse.
/// The size must be a power of two.
void fft_inplace(std::vector<cplx>& a, int sign);

std::vector<cplx> fft(std::vector<cplx> a);

/// Inverse transform including the 1/N factor.
std::vector<cplx> ifft(std::vector<cplx> a);

bool is_power_of_two(std::size_t n);

/// Smallest power of two >= n (n >= 1).
std::size_t next_power_of_two(std::size_t n);

}  // namespace bmoa
