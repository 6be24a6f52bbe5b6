// isar.hpp - range-Doppler image formation from slow-time profile sequences
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "stepchirp/profile.hpp"
#include "stepchirp/scene.hpp"
#include "stepchirp/synth.hpp"

namespace stepchirp {

/// Simulates n_trains consecutive trains (train m starts at m*t_pr, with the
/// scene rotated accordingly) and stitches each one.
std::vector<SyntheticSignal> collect_trains(const WaveformPlan& plan,
                                            const Scene& scene, int n_trains,
                                            double sample_rate_hz,
                                            int threads = 1);

/// Slow-time stack of range spectra, optionally cropped to a range window;
/// the memory-lean input to image formation.
struct ProfileStack {
    std::vector<std::complex<double>> data;  // n_trains x n_bins, row-major
    std::size_t n_trains = 0;
    std::size_t n_bins = 0;
    std::size_t bin0 = 0;        // first kept bin of the underlying profiles
    double bin_hz = 0.0;
    double chirp_rate_hz_s = 0.0;
    double train_interval_s = 0.0;

    double range_at(double bin_offset) const {
        return kSpeedOfLight * (static_cast<double>(bin0) + bin_offset) * bin_hz /
               (2.0 * chirp_rate_hz_s);
    }
};

/// Profiles every train with the given window/padding and keeps the bins
/// inside [range_lo_m, range_hi_m] (the full one-sided profile when
/// range_hi_m <= range_lo_m).
ProfileStack profile_stack(const std::vector<SyntheticSignal>& trains,
                           Window window, std::size_t fft_size,
                           double range_lo_m = 0.0, double range_hi_m = 0.0,
                           int threads = 1);

struct IsarImage {
    std::vector<std::complex<double>> pixels;  // n_range x n_cross, row-major
    std::size_t n_range = 0;
    std::size_t n_cross = 0;
    std::vector<double> range_axis_m;  // absolute range per row
    std::vector<double> cross_axis_m;  // cross-range per column
    double center_wavelength_m = 0.0;
    double aperture_angle_rad = 0.0;

    std::complex<double> at(std::size_t r, std::size_t c) const {
        return pixels[r * n_cross + c];
    }
};

/// Range-Doppler formation: per range bin, a windowed zero-padded FFT across
/// slow time (scaled by 1/sqrt(N) so total energy is preserved), shifted to
/// put zero Doppler at the center column. Doppler maps to cross-range with
/// bin spacing lambda*n_trains/(2*aperture*n_fft).
IsarImage form_image(const ProfileStack& stack, double center_wavelength_m,
                     double aperture_angle_rad, Window slow_window = Window::hann,
                     std::size_t pad_factor = 4);

/// Convenience overload for full (uncropped) profile sequences.
IsarImage form_image(const std::vector<RangeProfile>& profiles,
                     double center_wavelength_m, double aperture_angle_rad,
                     double train_interval_s, Window slow_window = Window::hann,
                     std::size_t pad_factor = 4);

/// lambda / (2 * aperture_angle).
double cross_range_resolution(double center_wavelength_m, double aperture_angle_rad);

}  // namespace stepchirp
