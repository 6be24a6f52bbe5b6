#include "stepchirp/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "stepchirp/fft.hpp"

namespace stepchirp {

namespace {

double mag_db(const std::complex<double>& x) {
    const double m = std::abs(x);
    return m > 0.0 ? 20.0 * std::log10(m) : -std::numeric_limits<double>::infinity();
}

// Lagrange interpolation of an oversampled spectrum grid at a fractional
// bin position. Valid for interior positions of a zero-padded transform.
std::complex<double> grid_interp(const std::vector<std::complex<double>>& g,
                                 double pos) {
    const int half = 4;
    long start = static_cast<long>(std::floor(pos)) - half + 1;
    start = std::clamp<long>(start, 0, static_cast<long>(g.size()) - 2 * half);
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < 2 * half; ++i) {
        const double xi = static_cast<double>(start + i);
        double w = 1.0;
        for (int j = 0; j < 2 * half; ++j) {
            if (j == i) continue;
            const double xj = static_cast<double>(start + j);
            w *= (pos - xj) / (xi - xj);
        }
        acc += w * g[static_cast<std::size_t>(start + i)];
    }
    return acc;
}

// Spectrum of the analysis window on the profile's padded grid; evaluating
// it at signed offsets models one tone's mainlobe and skirts.
struct MainlobeKernel {
    std::vector<std::complex<double>> grid;  // one-sided, same bin spacing
    double bin_hz = 0.0;

    std::complex<double> at(double offset_hz) const {
        const double pos = std::abs(offset_hz) / bin_hz;
        if (pos >= static_cast<double>(grid.size() - 4)) return {0.0, 0.0};
        const std::complex<double> v = grid_interp(grid, pos);
        return offset_hz >= 0.0 ? v : std::conj(v);
    }
};

MainlobeKernel make_kernel(const RangeProfile& p) {
    MainlobeKernel k;
    k.bin_hz = p.bin_hz();
    if (!p.window_spectrum.empty()) {
        k.grid = p.window_spectrum;
    } else {
        k.grid = real_spectrum(make_window(p.window, p.signal_len), p.fft_size);
    }
    return k;
}

// Iterative mainlobe subtraction (deconvolution of overlapping peaks): each
// round re-estimates every peak's frequency and complex amplitude on the
// spectrum with the other peaks' modeled lobes removed.
void refine_peaks(std::vector<Peak>& peaks, const RangeProfile& p) {
    if (peaks.size() < 2 || p.signal_len == 0 ||
        p.fft_size < 4 * p.signal_len) {
        return;  // nothing to deconvolve, or grid too coarse to interpolate
    }
    const MainlobeKernel kernel = make_kernel(p);
    const double k0 = std::abs(kernel.at(0.0));
    if (k0 == 0.0) return;
    const double bin = p.bin_hz();
    const long lobe_bins =
        std::lround(static_cast<double>(p.fft_size) / static_cast<double>(p.signal_len));

    const std::size_t n = peaks.size();
    std::vector<double> freq(n);
    std::vector<std::complex<double>> amp(n);
    for (std::size_t i = 0; i < n; ++i) {
        freq[i] = peaks[i].freq_hz;
        amp[i] = grid_interp(p.spectrum, freq[i] / bin) / kernel.at(0.0);
    }

    for (int round = 0; round < 60; ++round) {
        double max_step_hz = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            auto residual = [&](double bin_pos) {
                std::complex<double> r = grid_interp(p.spectrum, bin_pos);
                for (std::size_t j = 0; j < n; ++j) {
                    if (j != i) r -= amp[j] * kernel.at(bin_pos * bin - freq[j]);
                }
                return r;
            };
            // Apex of the residual magnitude near the current estimate.
            const long center = std::lround(freq[i] / bin);
            long best = center;
            double best_mag = -1.0;
            for (long b = center - lobe_bins; b <= center + lobe_bins; ++b) {
                if (b < 1 || b + 1 >= static_cast<long>(p.spectrum.size())) continue;
                const double m = std::abs(residual(static_cast<double>(b)));
                if (m > best_mag) {
                    best_mag = m;
                    best = b;
                }
            }
            const double y1 = std::abs(residual(static_cast<double>(best - 1)));
            const double y2 = std::abs(residual(static_cast<double>(best)));
            const double y3 = std::abs(residual(static_cast<double>(best + 1)));
            double delta = 0.0;
            const double denom = y1 - 2.0 * y2 + y3;
            if (denom < 0.0) delta = std::clamp(0.5 * (y1 - y3) / denom, -1.0, 1.0);
            const double next = (static_cast<double>(best) + delta) * bin;
            max_step_hz = std::max(max_step_hz, std::abs(next - freq[i]));
            freq[i] = next;
            amp[i] = residual(freq[i] / bin) / k0;
        }
        if (max_step_hz < 1e-3 * bin) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
        peaks[i].freq_hz = freq[i];
        peaks[i].range_m = p.range_at(freq[i] / bin);
    }
}

// Crossing of the level `target_db` between adjacent bins, walking away from
// the peak in direction `dir`. Linear interpolation on the dB curve.
double find_crossing(const RangeProfile& p, std::size_t peak_bin, double target_db,
                     int dir) {
    double prev_db = mag_db(p.spectrum[peak_bin]);
    long b = static_cast<long>(peak_bin);
    while (true) {
        const long nb = b + dir;
        if (nb < 0 || nb >= static_cast<long>(p.spectrum.size())) {
            throw std::runtime_error(
                "mainlobe_width_392: 3.92-dB crossing not found within spectrum");
        }
        const double cur_db = mag_db(p.spectrum[static_cast<std::size_t>(nb)]);
        if (cur_db <= target_db) {
            const double frac =
                (prev_db - target_db) / std::max(prev_db - cur_db, 1e-300);
            return static_cast<double>(b) + dir * frac;
        }
        if (cur_db > prev_db) {
            // Walked past a local minimum and up the next lobe.
            throw std::runtime_error(
                "mainlobe_width_392: mainlobe does not reach -3.92 dB");
        }
        prev_db = cur_db;
        b = nb;
    }
}

}  // namespace

RangeProfile range_profile(const SyntheticSignal& sig, Window window,
                           std::size_t fft_size) {
    const std::size_t len = sig.samples.size();
    if (len == 0) throw std::invalid_argument("range_profile: empty signal");
    if (fft_size == 0) fft_size = next_pow2(8 * len);
    if (fft_size < len || next_pow2(fft_size) != fft_size) {
        throw std::invalid_argument(
            "range_profile: fft_size must be a power of two >= signal length");
    }

    const std::vector<double> w = make_window(window, len);
    std::vector<double> tapered(len);
    std::vector<double> effective(len);
    for (std::size_t i = 0; i < len; ++i) {
        tapered[i] = sig.samples[i] * w[i];
        effective[i] = sig.sample_valid.empty() || sig.sample_valid[i] ? w[i] : 0.0;
    }

    RangeProfile out;
    out.spectrum = real_spectrum(tapered, fft_size);
    out.window_spectrum = real_spectrum(effective, fft_size);
    out.fft_size = fft_size;
    out.signal_len = len;
    out.sample_rate_hz = sig.sample_rate_hz;
    out.chirp_rate_hz_s = sig.plan.chirp_rate();
    out.window = window;
    return out;
}

double mainlobe_width_392(const RangeProfile& profile, std::size_t peak_bin) {
    const auto& s = profile.spectrum;
    if (peak_bin >= s.size()) {
        throw std::invalid_argument("mainlobe_width_392: peak_bin out of range");
    }
    const double m = std::abs(s[peak_bin]);
    if ((peak_bin > 0 && std::abs(s[peak_bin - 1]) > m) ||
        (peak_bin + 1 < s.size() && std::abs(s[peak_bin + 1]) > m)) {
        throw std::invalid_argument("mainlobe_width_392: peak_bin is not a local maximum");
    }
    const double target = mag_db(s[peak_bin]) - 3.92;
    const double left = find_crossing(profile, peak_bin, target, -1);
    const double right = find_crossing(profile, peak_bin, target, +1);
    return (right - left) * profile.bin_hz();
}

double measured_resolution(double width_hz, double chirp_rate_hz_s) {
    if (width_hz <= 0.0 || chirp_rate_hz_s <= 0.0) {
        throw std::invalid_argument("measured_resolution: inputs must be positive");
    }
    return kSpeedOfLight * width_hz / (2.0 * chirp_rate_hz_s);
}

std::vector<Peak> extract_peaks(const RangeProfile& profile,
                                double min_separation_hz, double threshold_db) {
    if (threshold_db >= 0.0) {
        throw std::invalid_argument("extract_peaks: threshold_db must be negative");
    }
    const auto& s = profile.spectrum;
    double max_mag = 0.0;
    for (const auto& x : s) max_mag = std::max(max_mag, std::abs(x));
    if (max_mag == 0.0) return {};
    const double max_db = 20.0 * std::log10(max_mag);

    std::vector<std::size_t> candidates;
    for (std::size_t b = 1; b + 1 < s.size(); ++b) {
        const double m = std::abs(s[b]);
        if (m >= std::abs(s[b - 1]) && m > std::abs(s[b + 1]) &&
            mag_db(s[b]) - max_db >= threshold_db) {
            candidates.push_back(b);
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) {
                         return std::abs(s[a]) > std::abs(s[b]);
                     });

    std::vector<Peak> peaks;
    for (std::size_t b : candidates) {
        const double f = profile.freq_at(static_cast<double>(b));
        const bool clear = std::all_of(
            peaks.begin(), peaks.end(), [&](const Peak& p) {
                return std::abs(p.freq_hz - f) >= min_separation_hz;
            });
        if (!clear) continue;

        Peak pk;
        pk.bin = b;
        // Sub-bin refinement: parabola through the log magnitudes of the
        // three bins around the maximum.
        double delta = 0.0;
        if (b > 0 && b + 1 < s.size()) {
            const double y1 = mag_db(s[b - 1]);
            const double y2 = mag_db(s[b]);
            const double y3 = mag_db(s[b + 1]);
            const double denom = y1 - 2.0 * y2 + y3;
            if (std::isfinite(y1) && std::isfinite(y3) && denom < 0.0) {
                delta = std::clamp(0.5 * (y1 - y3) / denom, -1.0, 1.0);
            }
        }
        pk.freq_hz = profile.freq_at(static_cast<double>(b) + delta);
        pk.range_m = profile.range_at(static_cast<double>(b) + delta);
        pk.magnitude_db = mag_db(s[b]) - max_db;
        try {
            pk.width_hz = mainlobe_width_392(profile, b);
        } catch (const std::runtime_error&) {
            pk.width_hz = 0.0;  // lobe truncated by a neighbor or the edge
        }
        peaks.push_back(pk);
    }
    refine_peaks(peaks, profile);
    return peaks;
}

}  // namespace stepchirp
