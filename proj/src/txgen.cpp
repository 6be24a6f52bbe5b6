#include "stepchirp/txgen.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "stepchirp/fft.hpp"
#include "stepchirp/windows.hpp"

namespace stepchirp {

SampledWaveform generate_transmit(const WaveformPlan& plan, double sample_rate_hz,
                                  int n_trains) {
    const PlanValidation v = validate_plan(plan);
    if (!v.ok()) throw std::invalid_argument("generate_transmit: invalid plan");
    if (n_trains < 1) throw std::invalid_argument("generate_transmit: n_trains < 1");
    const double f_top = subpulse_band_hi(plan, plan.n_subpulses - 1);
    if (!(sample_rate_hz > 2.0 * f_top)) {
        throw std::invalid_argument(
            "generate_transmit: sample rate below Nyquist for the top subpulse");
    }

    const double fs = sample_rate_hz;
    const double k = plan.chirp_rate();
    const double two_pi = 2.0 * std::numbers::pi;

    SampledWaveform w;
    w.sample_rate_hz = fs;
    w.samples.assign(
        static_cast<std::size_t>(std::llround(n_trains * plan.t_pr_s * fs)), 0.0);

    for (int m = 0; m < n_trains; ++m) {
        for (int n = 0; n < plan.n_subpulses; ++n) {
            const double start = m * plan.t_pr_s + n * plan.t_cr_s;
            const double f_lo = subpulse_band_lo(plan, n);
            const std::size_t j0 =
                static_cast<std::size_t>(std::ceil(start * fs));
            for (std::size_t j = j0; j < w.samples.size(); ++j) {
                const double u = static_cast<double>(j) / fs - start;
                if (u >= plan.t_cw_s) break;
                w.samples[j] = std::cos(two_pi * (f_lo * u + 0.5 * k * u * u));
            }
        }
    }
    return w;
}

Spectrogram spectrogram(const SampledWaveform& w, std::size_t window_len,
                        std::size_t hop) {
    if (window_len < 2 || window_len > w.samples.size() || hop < 1) {
        throw std::invalid_argument("spectrogram: degenerate window or hop");
    }
    const std::size_t nfft = next_pow2(window_len);
    const std::size_t n_frames = 1 + (w.samples.size() - window_len) / hop;
    const std::vector<double> win = make_window(Window::hann, window_len);

    Spectrogram out;
    out.n_frames = n_frames;
    out.n_bins = nfft / 2 + 1;
    out.t0_s = w.t0_s + 0.5 * static_cast<double>(window_len) / w.sample_rate_hz;
    out.frame_step_s = static_cast<double>(hop) / w.sample_rate_hz;
    out.bin_hz = w.sample_rate_hz / static_cast<double>(nfft);
    out.magnitude.resize(n_frames * out.n_bins);

    std::vector<std::complex<double>> buf;
    for (std::size_t f = 0; f < n_frames; ++f) {
        buf.assign(nfft, 0.0);
        const std::size_t base = f * hop;
        for (std::size_t i = 0; i < window_len; ++i) {
            buf[i] = w.samples[base + i] * win[i];
        }
        fft(buf);
        for (std::size_t b = 0; b < out.n_bins; ++b) {
            out.magnitude[f * out.n_bins + b] = std::abs(buf[b]);
        }
    }
    return out;
}

}  // namespace stepchirp
