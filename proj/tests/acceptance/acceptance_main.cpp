// acceptance_main.cpp - end-to-end acceptance suite; one pass/fail line per
// criterion. Usage: acceptance <configs_dir> <golden_dir> <work_dir>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "stepchirp/dechirp.hpp"
#include "stepchirp/fft.hpp"
#include "stepchirp/gapfill.hpp"
#include "stepchirp/io.hpp"
#include "stepchirp/isar.hpp"
#include "stepchirp/profile.hpp"
#include "stepchirp/runner.hpp"
#include "stepchirp/synth.hpp"
#include "stepchirp/txgen.hpp"
#include "test_helpers.hpp"

using namespace stepchirp;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kFs = 100e6;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Scene point_scene(double center_range_m = 1.5) {
    Scene s;
    s.center_range_m = center_range_m;
    s.scatterers = {{0.0, 0.0, 1.0}};
    return s;
}

std::size_t argmax_bin(const RangeProfile& p) {
    std::size_t best = 0;
    for (std::size_t b = 1; b < p.spectrum.size(); ++b) {
        if (std::abs(p.spectrum[b]) > std::abs(p.spectrum[best])) best = b;
    }
    return best;
}

// --------------------------------------------------------------------------
// 1. Resolution vs. N: measured 3.92-dB resolution tracks c/2B within 5%.
// --------------------------------------------------------------------------
void criterion_1() {
    const auto t0 = Clock::now();
    const WaveformPlan base = testutil::reference_plan();
    const Scene scene = point_scene();

    bool ok = true;
    std::string detail;
    double width9 = 0.0;
    double res9 = 0.0;
    for (int n = 1; n <= 9; ++n) {
        const WaveformPlan plan = base.with_subpulses(n);
        const auto sig = stitch(dechirp_frame(plan, scene, 0, kFs), plan);
        const auto prof = range_profile(sig, Window::rect);
        const double width = mainlobe_width_392(prof, argmax_bin(prof));
        const double res = measured_resolution(width, plan.chirp_rate());
        const double theory = theoretical_resolution(equivalent_bandwidth(plan));
        if (testutil::relative_error(res, theory) > 0.05) {
            ok = false;
            detail += " n=" + std::to_string(n) + " off by " +
                      std::to_string(100.0 * testutil::relative_error(res, theory)) +
                      "%";
        }
        if (n == 9) {
            width9 = width;
            res9 = res;
        }
    }
    if (testutil::relative_error(width9, 36.63e3) > 0.05) {
        ok = false;
        detail += " width(N=9) " + std::to_string(width9);
    }
    if (res9 < 8.2e-3 || res9 > 8.7e-3) {
        ok = false;
        detail += " res(N=9) " + std::to_string(res9);
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) ok = false;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "resolution vs N in 5%% of c/2B; N=9 width %.2f kHz, resolution "
                  "%.2f mm (%.2f s)%s",
                  width9 / 1e3, res9 * 1e3, dt, detail.c_str());
    report(1, ok, buf);
}

// --------------------------------------------------------------------------
// 2. Two targets 8.5 mm apart: two peaks 38 kHz apart at N=9, one at N=3.
// --------------------------------------------------------------------------
void criterion_2() {
    const auto t0 = Clock::now();
    const WaveformPlan base = testutil::reference_plan();
    const Scene scene = make_two_target_scene(8.5e-3);

    const auto sig9 = stitch(dechirp_frame(base, scene, 0, kFs), base);
    const auto prof9 = range_profile(sig9, Window::rect);
    const auto peaks9 = extract_peaks(prof9, 10e3, -6.0);

    const WaveformPlan plan3 = base.with_subpulses(3);
    const auto sig3 = stitch(dechirp_frame(plan3, scene, 0, kFs), plan3);
    const auto peaks3 =
        extract_peaks(range_profile(sig3, Window::rect), 10e3, -6.0);

    bool ok = peaks9.size() == 2 && peaks3.size() == 1;
    double spacing_hz = 0.0;
    double spacing_m = 0.0;
    if (peaks9.size() == 2) {
        spacing_hz = std::abs(peaks9[0].freq_hz - peaks9[1].freq_hz);
        spacing_m = spacing_hz * prof9.range_per_hz();
        if (std::abs(spacing_hz - 38e3) > 1.5e3) ok = false;
        if (std::abs(spacing_m - 8.5e-3) > 0.35e-3) ok = false;
    }
    const double dt = seconds_since(t0);
    if (dt >= 5.0) ok = false;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "N=9: %zu peaks, spacing %.2f kHz -> %.3f mm; N=3: %zu peak(s) "
                  "(%.2f s)",
                  peaks9.size(), spacing_hz / 1e3, spacing_m * 1e3, peaks3.size(), dt);
    report(2, ok, buf);
}

// --------------------------------------------------------------------------
// 3. Sub-signal coherence: residual 1e-9 on integer shifts, 1e-6 fractional.
// --------------------------------------------------------------------------
void criterion_3() {
    const Scene scene = point_scene();

    const WaveformPlan plan_int = testutil::reference_plan();
    const auto frame_int = dechirp_frame(plan_int, scene, 0, kFs);
    double worst_int = 0.0;
    for (int n = 1; n < plan_int.n_subpulses; ++n) {
        worst_int = std::max(worst_int, coherence_residual(frame_int, plan_int, n));
    }

    const WaveformPlan plan_frac = testutil::fractional_shift_plan();
    const auto frame_frac = dechirp_frame(plan_frac, scene, 0, kFs);
    double worst_frac = 0.0;
    for (int n = 1; n < plan_frac.n_subpulses; ++n) {
        worst_frac = std::max(worst_frac, coherence_residual(frame_frac, plan_frac, n));
    }

    const bool ok = worst_int <= 1e-9 && worst_frac <= 1e-6;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "coherence residual %.2e (integer shifts), %.2e (fractional)",
                  worst_int, worst_frac);
    report(3, ok, buf);
}

// --------------------------------------------------------------------------
// 4. De-chirp oracle: full-rate mixing + brick-wall decimation agrees with
//    the analytic receiver in peak bin (exactly) and phase (0.05 rad).
// --------------------------------------------------------------------------
void criterion_4() {
    const auto t0 = Clock::now();
    const WaveformPlan plan = testutil::reference_plan();
    const double fs_hi = 80e9;
    const std::size_t delay_samples = 800;  // tau = 10 ns exactly at 80 GSa/s
    const double tau = double(delay_samples) / fs_hi;
    const Scene scene = point_scene(0.5 * kSpeedOfLight * tau);

    // Reference transmit train and its delayed copy, mixed sample by sample.
    const SampledWaveform tx = generate_transmit(plan, fs_hi, 1);
    const std::size_t active = std::size_t(
        std::ceil(((plan.n_subpulses - 1) * plan.t_cr_s + plan.t_cw_s) * fs_hi)) +
        delay_samples;
    std::vector<std::complex<double>> buf(next_pow2(active));
    for (std::size_t i = delay_samples; i < active; ++i) {
        buf[i] = tx.samples[i] * tx.samples[i - delay_samples];
    }

    // Brick-wall low-pass at the decimated Nyquist (50 MHz), then decimate.
    fft(buf);
    const std::size_t cutoff =
        std::size_t(50e6 / (fs_hi / double(buf.size())));
    for (std::size_t b = cutoff + 1; b + cutoff < buf.size(); ++b) {
        buf[b] = 0.0;
    }
    fft(buf, true);

    const auto frame = dechirp_frame(plan, scene, 0, kFs);
    const std::size_t stride = std::size_t(std::llround(fs_hi / kFs));
    const std::size_t t_cr_n = std::size_t(std::llround(plan.t_cr_s * fs_hi));

    bool ok = true;
    std::string detail;
    for (int n : {0, 3, 8}) {
        std::vector<double> oracle_row(frame.row_len);
        for (std::size_t j = 0; j < frame.row_len; ++j) {
            oracle_row[j] = buf[std::size_t(n) * t_cr_n + j * stride].real();
        }
        const auto row = frame.row(n);

        // Peak bin of both rows on the same 8192-point grid.
        const auto spec_a = real_spectrum(oracle_row, 8192);
        const auto spec_b = real_spectrum(row, 8192);
        std::size_t pa = 0;
        std::size_t pb = 0;
        for (std::size_t b = 1; b < spec_a.size(); ++b) {
            if (std::abs(spec_a[b]) > std::abs(spec_a[pa])) pa = b;
            if (std::abs(spec_b[b]) > std::abs(spec_b[pb])) pb = b;
        }
        if (pa != pb) {
            ok = false;
            detail += " bin mismatch n=" + std::to_string(n);
        }

        // Initial phase via demodulation at the common peak frequency.
        const double f_peak = double(pb) * kFs / 8192.0;
        const auto za = testutil::goertzel_bin(oracle_row, f_peak, kFs);
        const auto zb = testutil::goertzel_bin(row, f_peak, kFs);
        const double dphi =
            std::abs(std::remainder(std::arg(za) - std::arg(zb), 2 * std::numbers::pi));
        if (dphi > 0.05) {
            ok = false;
            detail += " phase " + std::to_string(dphi) + " rad at n=" + std::to_string(n);
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 30.0) ok = false;
    char buf2[160];
    std::snprintf(buf2, sizeof(buf2),
                  "mixing oracle matches analytic de-chirp on rows 0/3/8 "
                  "(%.1f s)%s",
                  dt, detail.c_str());
    report(4, ok, buf2);
}

// --------------------------------------------------------------------------
// 5. AR gap fill: (a) gap RMS < 2%, (b) spurious sidelobe improves >= 15 dB,
//    (c) gap-filled ISAR image correlates >= 0.95 with the clean one.
// --------------------------------------------------------------------------
void criterion_5() {
    const WaveformPlan plan = testutil::reference_plan();
    const Scene scene = make_two_target_scene(8.5e-3);
    const auto frame = dechirp_frame(plan, scene, 0, kFs);
    const auto clean = stitch(frame, plan);

    GapSpec gap;
    gap.band_hz = {22.9e9, 25.1e9};
    const auto masked = stitch(apply_gap(frame, gap, plan).frame, plan);
    const auto filled = fill_gap(masked, 0);

    // (a) RMS over the reconstructed interval (arrival-settled samples).
    double err = 0.0;
    double ref = 0.0;
    for (std::size_t g = 900; g < 1200; ++g) {
        if (!clean.sample_valid[g]) continue;
        err += (filled.samples[g] - clean.samples[g]) *
               (filled.samples[g] - clean.samples[g]);
        ref += clean.samples[g] * clean.samples[g];
    }
    const double rms_ratio = std::sqrt(err / ref);
    const bool ok_a = rms_ratio < 0.02;

    // (b) Highest spurious spectral level relative to the true peaks, before
    // and after filling, measured on Hann-windowed profiles so the analysis
    // window's own sidelobes sit far below the gap artifacts. Spurious =
    // anything beyond 3 mainlobe widths from both true tones.
    //
    // Calibration record (brute-force unmasked/masked comparison, this
    // configuration): masked spurious level -16.6 dB, filled -44.1 dB,
    // improvement 27.5 dB; threshold pinned at 15 dB. The clean/filled
    // V-image correlation measures 0.9999; threshold pinned at 0.95.
    const auto prof_clean = range_profile(clean, Window::hann);
    const auto peaks = extract_peaks(prof_clean, 10e3, -6.0);
    const double guard = 3.0 * 1.63 / (double(clean.samples.size()) / kFs);
    auto spurious_db = [&](const SyntheticSignal& sig) {
        const auto prof = range_profile(sig, Window::hann);
        double peak_mag = 0.0;
        double spur = 0.0;
        for (std::size_t b = 0; b < prof.spectrum.size(); ++b) {
            const double f = prof.freq_at(double(b));
            const double m = std::abs(prof.spectrum[b]);
            peak_mag = std::max(peak_mag, m);
            bool guarded = f < 1e6;  // ignore the DC skirt
            for (const auto& p : peaks) {
                if (std::abs(f - p.freq_hz) < guard) guarded = true;
            }
            if (!guarded) spur = std::max(spur, m);
        }
        return 20.0 * std::log10(spur / peak_mag);
    };
    const double spur_before = spurious_db(masked);
    const double spur_after = spurious_db(filled);
    const double improvement = spur_before - spur_after;
    const bool ok_b = improvement >= 15.0;

    // (c) Interference-filled ISAR image of the rotating "V".
    ScenarioConfig vcfg;
    vcfg.plan = plan;
    vcfg.scene = make_v_scene(0.098, 53.0, 0.01);
    vcfg.scene.omega_rad_s = 2.0 * std::numbers::pi;
    vcfg.sample_rate_hz = kFs;
    vcfg.gap = gap;
    const int n_trains = 1528;

    auto image_of = [&](bool with_gap, bool with_fill) {
        const auto trains =
            simulate_trains(vcfg, plan, n_trains, with_gap, with_fill, 0);
        const ProfileStack stack =
            profile_stack(trains, Window::rect, 32768, 1.25, 1.75, 0);
        const double lambda = kSpeedOfLight / synthesized_band(plan).center_hz();
        const double aperture = vcfg.scene.omega_rad_s * n_trains * plan.t_pr_s;
        return form_image(stack, lambda, aperture, Window::hann, 2);
    };
    const IsarImage img_clean = image_of(false, false);
    const IsarImage img_filled = image_of(true, true);
    double num = 0.0;
    double ea = 0.0;
    double eb = 0.0;
    for (std::size_t i = 0; i < img_clean.pixels.size(); ++i) {
        const double a = std::abs(img_clean.pixels[i]);
        const double b = std::abs(img_filled.pixels[i]);
        num += a * b;
        ea += a * a;
        eb += b * b;
    }
    const double corr = num / std::sqrt(ea * eb);
    const bool ok_c = corr >= 0.95;

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "gap RMS %.3g%%; spurious sidelobe improves %.1f dB "
                  "(%.1f -> %.1f); V-image correlation %.4f",
                  100.0 * rms_ratio, improvement, spur_before, spur_after, corr);
    report(5, ok_a && ok_b && ok_c, buf);
}

// --------------------------------------------------------------------------
// Helpers for criteria 6 and 8: PGM parsing and image comparison.
// --------------------------------------------------------------------------
struct PgmImage {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // 0..1
};

PgmImage read_pgm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::string magic;
    std::size_t w = 0;
    std::size_t h = 0;
    long maxval = 0;
    f >> magic >> w >> h >> maxval;
    if (magic != "P5" || maxval != 65535) throw std::runtime_error("bad pgm " + path);
    f.get();  // single whitespace after the header
    PgmImage img;
    img.rows = h;
    img.cols = w;
    img.values.resize(w * h);
    std::vector<unsigned char> raw(w * h * 2);
    f.read(reinterpret_cast<char*>(raw.data()), std::streamsize(raw.size()));
    if (!f) throw std::runtime_error("truncated pgm " + path);
    for (std::size_t i = 0; i < w * h; ++i) {
        img.values[i] = double((raw[2 * i] << 8) | raw[2 * i + 1]) / 65535.0;
    }
    return img;
}

double pgm_correlation(const PgmImage& a, const PgmImage& b) {
    if (a.values.size() != b.values.size()) return 0.0;
    double num = 0.0;
    double ea = 0.0;
    double eb = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        num += a.values[i] * b.values[i];
        ea += a.values[i] * a.values[i];
        eb += b.values[i] * b.values[i];
    }
    return num / std::sqrt(ea * eb);
}

// --------------------------------------------------------------------------
// 6. Point-spread widths at a 5-degree aperture plus the full-aperture
//    "V" image: runtime bound, golden regression, both arms visible.
// --------------------------------------------------------------------------
void criterion_6(const std::string& fig8_out, double fig8_seconds,
                 const std::string& golden_dir) {
    const WaveformPlan plan = testutil::reference_plan();

    // Point-spread test at a small aperture.
    Scene scene = point_scene();
    scene.scatterers = {{0.02, 0.0, 1.0}};
    scene.omega_rad_s = 2.0 * std::numbers::pi;
    const int n_trains = 193;  // 5.0 degrees at 360 deg/s
    const auto trains = collect_trains(plan, scene, n_trains, kFs);
    const ProfileStack stack = profile_stack(trains, Window::rect, 32768, 1.3, 1.7);
    const double lambda = kSpeedOfLight / synthesized_band(plan).center_hz();
    const double aperture = scene.omega_rad_s * n_trains * plan.t_pr_s;
    const IsarImage img = form_image(stack, lambda, aperture, Window::rect, 8);

    std::size_t pr = 0;
    std::size_t pc = 0;
    double pm = 0.0;
    for (std::size_t r = 0; r < img.n_range; ++r) {
        for (std::size_t c = 0; c < img.n_cross; ++c) {
            if (std::abs(img.at(r, c)) > pm) {
                pm = std::abs(img.at(r, c));
                pr = r;
                pc = c;
            }
        }
    }
    // 3.92-dB crossings along each axis through the peak.
    auto width_along = [&](bool range_axis) {
        const double target = pm * std::pow(10.0, -3.92 / 20.0);
        auto value = [&](long i) {
            return range_axis ? std::abs(img.at(std::size_t(i), pc))
                              : std::abs(img.at(pr, std::size_t(i)));
        };
        const long limit = long(range_axis ? img.n_range : img.n_cross);
        auto cross = [&](int dir) {
            long i = long(range_axis ? pr : pc);
            double prev = pm;
            while (true) {
                const long ni = i + dir;
                if (ni < 0 || ni >= limit) return double(i);
                const double cur = value(ni);
                if (cur <= target) {
                    return double(i) + dir * (prev - target) / (prev - cur);
                }
                prev = cur;
                i = ni;
            }
        };
        const double lo = cross(-1);
        const double hi = cross(+1);
        const double step = range_axis ? img.range_axis_m[1] - img.range_axis_m[0]
                                       : img.cross_axis_m[1] - img.cross_axis_m[0];
        return (hi - lo) * std::abs(step);
    };
    const double range_width = width_along(true);
    const double cross_width = width_along(false);
    const double range_want = theoretical_resolution(equivalent_bandwidth(plan));
    const double cross_want = cross_range_resolution(lambda, aperture);
    bool ok = testutil::relative_error(range_width, range_want) <= 0.10 &&
              testutil::relative_error(cross_width, cross_want) <= 0.10;
    std::string detail;

    // Full-aperture image: runtime plus golden regression.
    if (fig8_seconds >= 60.0) {
        ok = false;
        detail += " fig8 runtime " + std::to_string(fig8_seconds) + " s";
    }
    const std::string golden_path = golden_dir + "/fig8.pgm";
    double golden_corr = 0.0;
    PgmImage fig8_img;
    try {
        fig8_img = read_pgm(fig8_out + "/image.pgm");
        const PgmImage golden = read_pgm(golden_path);
        golden_corr = pgm_correlation(fig8_img, golden);
        if (golden_corr < 0.999) {
            ok = false;
            detail += " golden correlation " + std::to_string(golden_corr);
        }
    } catch (const std::exception& e) {
        ok = false;
        detail += std::string(" golden: ") + e.what();
    }

    // Both arms visible: at one third of the arm height above the vertex the
    // "V" has two distinct ridges; require two local maxima above -20 dB of
    // the image peak in that image row, separated by a dip of at least 6 dB.
    double arm_sep_db = 0.0;
    std::size_t n_arm_peaks = 0;
    if (!fig8_img.values.empty()) {
        // Scene geometry at mid-aperture (19.8 deg): vertex near the low-range
        // end of the V. Probe the row at the expected arm-crossing range.
        const Scene v = make_v_scene(0.098, 53.0, 0.01);
        const double theta_mid = 0.5 * 2.0 * std::numbers::pi * 1528 * plan.t_pr_s;
        // Range rows available from the fig8 crop (1.25..1.75 m band).
        double vertex_y = 1e9;
        for (const auto& s : v.scatterers) vertex_y = std::min(vertex_y, s.y_m);
        const double probe_y =
            1.5 + (vertex_y + 0.055) * std::cos(theta_mid);  // mid-arm row
        // fig8 image rows span the stack's crop; recompute the row index.
        const double row0_m = 1.5 - 0.25;
        const double row_step =
            (2.0 * 0.25) / double(fig8_img.rows);  // approximate, checked below
        std::size_t row = std::size_t((probe_y - row0_m) / row_step);
        row = std::min(row, fig8_img.rows - 1);

        double best = 0.0;
        for (double vv : fig8_img.values) best = std::max(best, vv);
        std::vector<double> cut(fig8_img.cols);
        for (std::size_t c = 0; c < fig8_img.cols; ++c) {
            cut[c] = fig8_img.values[row * fig8_img.cols + c];
        }
        // Local maxima above the -20 dB level (pgm value is dB-scaled).
        const double level = best - 20.0 / 40.0;  // 40 dB floor scaling
        double last_peak = -1.0;
        double dip = 1.0;
        for (std::size_t c = 1; c + 1 < cut.size(); ++c) {
            if (cut[c] >= cut[c - 1] && cut[c] > cut[c + 1] && cut[c] > level) {
                if (n_arm_peaks > 0) {
                    arm_sep_db = std::max(arm_sep_db, 40.0 * (std::min(last_peak, cut[c]) - dip));
                }
                ++n_arm_peaks;
                last_peak = cut[c];
                dip = 1.0;
            }
            dip = std::min(dip, cut[c]);
        }
        if (n_arm_peaks < 2 || arm_sep_db < 6.0) {
            ok = false;
            detail += " arms not resolved (peaks " + std::to_string(n_arm_peaks) +
                      ", dip " + std::to_string(arm_sep_db) + " dB)";
        }
    }

    char buf[240];
    std::snprintf(buf, sizeof(buf),
                  "point spread %.2f/%.2f mm (want %.2f/%.2f), fig8 %.1f s, "
                  "golden corr %.4f, arm peaks %zu dip %.1f dB%s",
                  range_width * 1e3, cross_width * 1e3, range_want * 1e3,
                  cross_want * 1e3, fig8_seconds, golden_corr, n_arm_peaks,
                  arm_sep_db, detail.c_str());
    report(6, ok, buf);
}

// --------------------------------------------------------------------------
// 7. Plan formulas, exact.
// --------------------------------------------------------------------------
void criterion_7() {
    const auto t0 = Clock::now();
    const WaveformPlan plan = testutil::reference_plan();
    const PlanValidation v = validate_plan(plan);
    const bool ok = max_subpulse_count(16e9, 2e9) == 9 &&
                    equivalent_bandwidth(plan) == 18.2e9 && v.ok() &&
                    v.m_ratio == 14 &&
                    masked_subpulses(plan, 22.9e9, 25.1e9) == std::vector<int>{3} &&
                    seconds_since(t0) < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "n_max=9, B_eq=18.2 GHz, M=%d, interference masks index 3 "
                  "(%.3f s)",
                  v.m_ratio, seconds_since(t0));
    report(7, ok, buf);
}

// --------------------------------------------------------------------------
// 8. Determinism: the full imaging recipe twice, byte for byte.
// --------------------------------------------------------------------------
double run_fig8(const std::string& configs_dir, const std::string& out_dir) {
    RunOptions opts;
    opts.out_dir = out_dir;
    opts.threads = 0;  // hardware concurrency
    const auto t0 = Clock::now();
    const int rc = run_scenario(configs_dir + "/fig8.cfg", opts);
    if (rc != kExitOk) throw std::runtime_error("fig8 run failed");
    return seconds_since(t0);
}

void criterion_8(const std::string& out_a, const std::string& out_b) {
    bool ok = true;
    std::string detail;
    for (const char* f : {"image.pgm", "image_axes.csv", "report.json"}) {
        const auto a = read_file_bytes(out_a + "/" + std::string(f));
        const auto b = read_file_bytes(out_b + "/" + std::string(f));
        if (a != b) {
            ok = false;
            detail += std::string(" ") + f + " differs";
        }
    }
    report(8, ok, "repeated imaging runs byte-identical" + detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 4) {
        std::fprintf(stderr, "usage: acceptance <configs_dir> <golden_dir> <work_dir>\n");
        return 2;
    }
    const std::string configs_dir = argv[1];
    const std::string golden_dir = argv[2];
    const std::string work_dir = argv[3];
    fs::create_directories(work_dir);

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();

    double fig8_seconds = 0.0;
    const std::string out_a = work_dir + "/fig8_a";
    const std::string out_b = work_dir + "/fig8_b";
    try {
        fig8_seconds = run_fig8(configs_dir, out_a);
        run_fig8(configs_dir, out_b);
    } catch (const std::exception& e) {
        report(6, false, std::string("fig8 run failed: ") + e.what());
        report(7, false, "skipped after fig8 failure");
        report(8, false, "skipped after fig8 failure");
        return 1;
    }
    criterion_6(out_a, fig8_seconds, golden_dir);
    criterion_7();
    criterion_8(out_a, out_b);

    std::printf("%s (%d criteria failed)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
