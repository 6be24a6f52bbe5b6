#include "stepchirp/isar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "stepchirp/fft.hpp"
#include "stepchirp/parallel.hpp"

namespace stepchirp {

std::vector<SyntheticSignal> collect_trains(const WaveformPlan& plan,
                                            const Scene& scene, int n_trains,
                                            double sample_rate_hz, int threads) {
    if (n_trains < 2) throw std::invalid_argument("collect_trains: need n_trains >= 2");
    std::vector<SyntheticSignal> out(static_cast<std::size_t>(n_trains));
    parallel_for(static_cast<std::size_t>(n_trains), threads, [&](std::size_t m) {
        const SubSignalFrame frame =
            dechirp_frame(plan, scene, static_cast<int>(m), sample_rate_hz);
        out[m] = stitch(frame, plan);
    });
    return out;
}

ProfileStack profile_stack(const std::vector<SyntheticSignal>& trains,
                           Window window, std::size_t fft_size, double range_lo_m,
                           double range_hi_m, int threads) {
    if (trains.size() < 2) throw std::invalid_argument("profile_stack: need >= 2 trains");
    const SyntheticSignal& first = trains.front();
    for (const auto& t : trains) {
        if (t.samples.size() != first.samples.size()) {
            throw std::invalid_argument("profile_stack: train lengths differ");
        }
    }
    if (fft_size == 0) fft_size = next_pow2(8 * first.samples.size());

    ProfileStack stack;
    stack.n_trains = trains.size();
    stack.bin_hz = first.sample_rate_hz / static_cast<double>(fft_size);
    stack.chirp_rate_hz_s = first.plan.chirp_rate();
    stack.train_interval_s = first.plan.t_pr_s;

    const double hz_per_m = 2.0 * stack.chirp_rate_hz_s / kSpeedOfLight;
    std::size_t b_lo = 0;
    std::size_t b_hi = fft_size / 2 + 1;
    if (range_hi_m > range_lo_m) {
        b_lo = static_cast<std::size_t>(
            std::max(0.0, std::floor(range_lo_m * hz_per_m / stack.bin_hz)));
        b_hi = std::min<std::size_t>(
            b_hi, static_cast<std::size_t>(
                      std::ceil(range_hi_m * hz_per_m / stack.bin_hz)) + 1);
        if (b_lo >= b_hi) throw std::invalid_argument("profile_stack: empty range window");
    }
    stack.bin0 = b_lo;
    stack.n_bins = b_hi - b_lo;
    stack.data.resize(stack.n_trains * stack.n_bins);

    parallel_for(trains.size(), threads, [&](std::size_t m) {
        const RangeProfile p = range_profile(trains[m], window, fft_size);
        std::copy(p.spectrum.begin() + static_cast<std::ptrdiff_t>(b_lo),
                  p.spectrum.begin() + static_cast<std::ptrdiff_t>(b_hi),
                  stack.data.begin() + static_cast<std::ptrdiff_t>(m * stack.n_bins));
    });
    return stack;
}

IsarImage form_image(const ProfileStack& stack, double center_wavelength_m,
                     double aperture_angle_rad, Window slow_window,
                     std::size_t pad_factor) {
    if (stack.n_trains < 2) throw std::invalid_argument("form_image: need >= 2 trains");
    if (center_wavelength_m <= 0.0 || aperture_angle_rad <= 0.0) {
        throw std::invalid_argument("form_image: bad wavelength or aperture");
    }
    if (pad_factor == 0 || next_pow2(pad_factor) != pad_factor) {
        throw std::invalid_argument("form_image: pad_factor must be a power of two");
    }

    const std::size_t m_trains = stack.n_trains;
    const std::size_t nfft = next_pow2(m_trains) * pad_factor;
    const std::vector<double> win = make_window(slow_window, m_trains);
    const double scale = 1.0 / std::sqrt(static_cast<double>(nfft));

    IsarImage img;
    img.n_range = stack.n_bins;
    img.n_cross = nfft;
    img.center_wavelength_m = center_wavelength_m;
    img.aperture_angle_rad = aperture_angle_rad;
    img.pixels.assign(img.n_range * img.n_cross, {0.0, 0.0});

    img.range_axis_m.resize(img.n_range);
    for (std::size_t r = 0; r < img.n_range; ++r) {
        img.range_axis_m[r] = stack.range_at(static_cast<double>(r));
    }

    // Doppler f_d = (c - nfft/2) / (nfft * t_pr) after the center shift maps
    // to cross-range x = -lambda * f_d / (2 * omega); the sign matches the
    // rotation convention of scatterer_delay (positive x approaches the
    // radar, lowering the beat frequency).
    const double omega = aperture_angle_rad /
                         (static_cast<double>(m_trains) * stack.train_interval_s);
    const double dfd = 1.0 / (static_cast<double>(nfft) * stack.train_interval_s);
    img.cross_axis_m.resize(img.n_cross);
    for (std::size_t c = 0; c < img.n_cross; ++c) {
        const double fd =
            (static_cast<double>(c) - 0.5 * static_cast<double>(nfft)) * dfd;
        img.cross_axis_m[c] = -center_wavelength_m * fd / (2.0 * omega);
    }
    // Keep the cross-range axis ascending: flip columns instead of storing a
    // descending axis.
    std::reverse(img.cross_axis_m.begin(), img.cross_axis_m.end());

    std::vector<std::complex<double>> buf(nfft);
    for (std::size_t r = 0; r < img.n_range; ++r) {
        std::fill(buf.begin(), buf.end(), std::complex<double>(0.0, 0.0));
        for (std::size_t m = 0; m < m_trains; ++m) {
            buf[m] = stack.data[m * stack.n_bins + r] * win[m];
        }
        fft(buf);
        // fftshift, then mirror so columns run with the ascending axis.
        for (std::size_t c = 0; c < nfft; ++c) {
            const std::size_t shifted = (c + nfft / 2) % nfft;
            img.pixels[r * img.n_cross + (nfft - 1 - c)] = buf[shifted] * scale;
        }
    }
    return img;
}

IsarImage form_image(const std::vector<RangeProfile>& profiles,
                     double center_wavelength_m, double aperture_angle_rad,
                     double train_interval_s, Window slow_window,
                     std::size_t pad_factor) {
    if (profiles.size() < 2) throw std::invalid_argument("form_image: need >= 2 profiles");
    const std::size_t n_bins = profiles.front().spectrum.size();
    ProfileStack stack;
    stack.n_trains = profiles.size();
    stack.n_bins = n_bins;
    stack.bin0 = 0;
    stack.bin_hz = profiles.front().bin_hz();
    stack.chirp_rate_hz_s = profiles.front().chirp_rate_hz_s;
    stack.train_interval_s = train_interval_s;
    stack.data.resize(stack.n_trains * n_bins);
    for (std::size_t m = 0; m < profiles.size(); ++m) {
        if (profiles[m].spectrum.size() != n_bins) {
            throw std::invalid_argument("form_image: profile lengths differ");
        }
        std::copy(profiles[m].spectrum.begin(), profiles[m].spectrum.end(),
                  stack.data.begin() + static_cast<std::ptrdiff_t>(m * n_bins));
    }
    return form_image(stack, center_wavelength_m, aperture_angle_rad, slow_window,
                      pad_factor);
}

double cross_range_resolution(double center_wavelength_m,
                              double aperture_angle_rad) {
    if (center_wavelength_m <= 0.0 || aperture_angle_rad <= 0.0 ||
        aperture_angle_rad >= std::numbers::pi) {
        throw std::invalid_argument("cross_range_resolution: invalid inputs");
    }
    return center_wavelength_m / (2.0 * aperture_angle_rad);
}

}  // namespace stepchirp
