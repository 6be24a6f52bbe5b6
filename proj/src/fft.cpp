#include "stepchirp/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stepchirp {

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

void fft(std::vector<std::complex<double>>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft: size must be a nonzero power of two");
    }

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }

    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wstep = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                // Re-anchor the twiddle periodically to stop round-off drift.
                if ((j & 31u) == 0) w = std::polar(1.0, ang * static_cast<double>(j));
                const std::complex<double> u = data[i + j];
                const std::complex<double> v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wstep;
            }
        }
    }

    if (inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (auto& x : data) x *= scale;
    }
}

std::vector<std::complex<double>> real_spectrum(std::span<const double> signal,
                                                std::size_t fft_size) {
    if (fft_size < signal.size()) {
        throw std::invalid_argument("real_spectrum: fft_size smaller than signal");
    }
    std::vector<std::complex<double>> buf(next_pow2(fft_size));
    if (buf.size() != fft_size) {
        throw std::invalid_argument("real_spectrum: fft_size must be a power of two");
    }
    for (std::size_t i = 0; i < signal.size(); ++i) buf[i] = signal[i];
    fft(buf);
    buf.resize(fft_size / 2 + 1);
    return buf;
}

}  // namespace stepchirp
