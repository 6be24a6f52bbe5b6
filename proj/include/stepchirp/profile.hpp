// profile.hpp - range profiles, mainlobe metrology, peak extraction
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "stepchirp/plan.hpp"
#include "stepchirp/synth.hpp"
#include "stepchirp/windows.hpp"

namespace stepchirp {

/// One-sided spectrum of a de-chirped signal with the beat-frequency to
/// range mapping R = c*f/(2k). Spectrum is the raw (unscaled) DFT.
struct RangeProfile {
    std::vector<std::complex<double>> spectrum;  // bins 0..fft_size/2
    // Transform of the effective analysis window (taper times the signal's
    // arrival-gating mask) on the same grid; the single-tone response model
    // used by peak deconvolution.
    std::vector<std::complex<double>> window_spectrum;
    std::size_t fft_size = 0;
    std::size_t signal_len = 0;
    double sample_rate_hz = 0.0;
    double chirp_rate_hz_s = 0.0;
    Window window = Window::rect;

    double bin_hz() const { return sample_rate_hz / static_cast<double>(fft_size); }
    double freq_at(double bin) const { return bin * bin_hz(); }
    double range_at(double bin) const {
        return kSpeedOfLight * freq_at(bin) / (2.0 * chirp_rate_hz_s);
    }
    double range_per_hz() const { return kSpeedOfLight / (2.0 * chirp_rate_hz_s); }
};

struct Peak {
    double freq_hz = 0.0;       // sub-bin estimate (parabolic on log magnitude)
    double range_m = 0.0;
    double magnitude_db = 0.0;  // relative to the profile maximum, <= 0
    double width_hz = 0.0;      // two-sided 3.92-dB mainlobe width
    std::size_t bin = 0;
};

/// Windowed, zero-padded one-sided spectrum. fft_size = 0 picks the default
/// policy: next power of two >= 8x the signal length (keeps the width
/// interpolation error well below 1% of 1/T).
RangeProfile range_profile(const SyntheticSignal& sig, Window window,
                           std::size_t fft_size = 0);

/// Two-sided width of the mainlobe around peak_bin at 3.92 dB below the
/// peak, with linear interpolation (in dB) between bins. For a rect-windowed
/// tone of duration T this equals 1/T, which is what ties the measured width
/// to the c/(2B) resolution.
double mainlobe_width_392(const RangeProfile& profile, std::size_t peak_bin);

/// Range resolution implied by a measured mainlobe width: c*width/(2k).
double measured_resolution(double width_hz, double chirp_rate_hz_s);

/// Local maxima above threshold_db (relative to the profile maximum),
/// greedily pruned to min_separation_hz, strongest first. When several
/// peaks are found, their frequencies are refined by iteratively
/// subtracting the other peaks' modeled mainlobes (the window's transform)
/// from the spectrum; near the Rayleigh limit the raw apexes are pushed
/// several kHz apart by coherent interference, and the refinement recovers
/// the underlying tone positions.
std::vector<Peak> extract_peaks(const RangeProfile& profile,
                                double min_separation_hz, double threshold_db);

}  // namespace stepchirp
