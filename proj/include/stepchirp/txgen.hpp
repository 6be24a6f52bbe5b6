// txgen.hpp - full-rate frequency-stepped chirp generation and STFT
#pragma once

#include <cstddef>
#include <vector>

#include "stepchirp/plan.hpp"

namespace stepchirp {

struct SampledWaveform {
    std::vector<double> samples;
    double sample_rate_hz = 0.0;
    double t0_s = 0.0;
};

/// Real-valued transmit signal: per train and subpulse, a unit-amplitude
/// chirp cos(2*pi*(f_lo_n*u + k*u^2/2)) gated on u in [0, t_cw), placed at
/// t = m*t_pr + n*t_cr. For inspection and oracle checks only; the receive
/// path evaluates the de-chirp model directly.
///
/// Throws std::invalid_argument when the sample rate violates Nyquist for
/// the highest subpulse or n_trains < 1.
SampledWaveform generate_transmit(const WaveformPlan& plan, double sample_rate_hz,
                                  int n_trains);

struct Spectrogram {
    std::vector<double> magnitude;  // n_frames x n_bins, row-major
    std::size_t n_frames = 0;
    std::size_t n_bins = 0;
    double t0_s = 0.0;              // center time of the first frame
    double frame_step_s = 0.0;
    double bin_hz = 0.0;

    double at(std::size_t frame, std::size_t bin) const {
        return magnitude[frame * n_bins + bin];
    }
};

/// Magnitude STFT with a Hann window, zero-padded per frame to the next
/// power of two.
Spectrogram spectrogram(const SampledWaveform& w, std::size_t window_len,
                        std::size_t hop);

}  // namespace stepchirp
