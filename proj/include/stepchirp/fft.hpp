// fft.hpp - radix-2 FFT and spectrum helpers
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace stepchirp {

/// Smallest power of two that is >= n (n >= 1).
std::size_t next_pow2(std::size_t n);

/// In-place complex FFT. Size must be a power of two.
/// Unscaled forward transform; the inverse applies the 1/N factor.
void fft(std::vector<std::complex<double>>& data, bool inverse = false);

/// One-sided spectrum of a real signal: bins 0..fft_size/2 of the
/// zero-padded DFT (unscaled).
std::vector<std::complex<double>> real_spectrum(std::span<const double> signal,
                                                std::size_t fft_size);

}  // namespace stepchirp
