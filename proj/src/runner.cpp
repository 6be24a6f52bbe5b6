#include "stepchirp/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "stepchirp/dechirp.hpp"
#include "stepchirp/fft.hpp"
#include "stepchirp/gapfill.hpp"
#include "stepchirp/io.hpp"
#include "stepchirp/isar.hpp"
#include "stepchirp/parallel.hpp"
#include "stepchirp/profile.hpp"
#include "stepchirp/txgen.hpp"

namespace stepchirp {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunContext {
    ScenarioConfig cfg;
    std::string config_path;
    std::string out_dir;
    int threads = 1;
    json report;
    json outputs = json::array();

    std::string artifact(const std::string& name) const {
        return (fs::path(out_dir) / name).string();
    }
    void note_output(const std::string& name, const std::string& kind,
                     json extra = json::object()) {
        extra["file"] = name;
        extra["kind"] = kind;
        outputs.push_back(extra);
    }
};

json plan_summary(const WaveformPlan& plan) {
    const PlanValidation v = validate_plan(plan);
    const BandSpan band = synthesized_band(plan);
    json j;
    j["n_subpulses"] = plan.n_subpulses;
    j["n_max"] = v.n_max;
    j["m_ratio"] = v.m_ratio;
    j["chirp_rate_hz_s"] = plan.chirp_rate();
    j["equivalent_bandwidth_hz"] = equivalent_bandwidth(plan);
    j["theoretical_resolution_m"] = theoretical_resolution(equivalent_bandwidth(plan));
    j["band_lo_hz"] = band.lo_hz;
    j["band_hi_hz"] = band.hi_hz;
    return j;
}

std::size_t profile_fft_size(const ScenarioConfig& cfg, std::size_t signal_len) {
    return next_pow2(static_cast<std::size_t>(cfg.fft_pad_factor) * signal_len);
}

double image_correlation(const IsarImage& a, const IsarImage& b) {
    if (a.pixels.size() != b.pixels.size()) {
        throw std::invalid_argument("image_correlation: size mismatch");
    }
    double num = 0.0;
    double ea = 0.0;
    double eb = 0.0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const double ma = std::abs(a.pixels[i]);
        const double mb = std::abs(b.pixels[i]);
        num += ma * mb;
        ea += ma * ma;
        eb += mb * mb;
    }
    if (ea == 0.0 || eb == 0.0) return 0.0;
    return num / std::sqrt(ea * eb);
}

struct ImageSetup {
    double lambda_m = 0.0;
    double aperture_rad = 0.0;
    double range_lo = 0.0;
    double range_hi = 0.0;
};

ImageSetup image_setup(const ScenarioConfig& cfg, const WaveformPlan& plan) {
    ImageSetup s;
    s.lambda_m = kSpeedOfLight / synthesized_band(plan).center_hz();
    s.aperture_rad =
        cfg.scene.omega_rad_s * cfg.n_trains * plan.t_pr_s;
    if (cfg.range_window_m > 0.0) {
        s.range_lo = cfg.scene.center_range_m - cfg.range_window_m;
        s.range_hi = cfg.scene.center_range_m + cfg.range_window_m;
    }
    return s;
}

IsarImage make_isar_image(const RunContext& ctx,
                          const std::vector<SyntheticSignal>& trains,
                          const ImageSetup& s) {
    const ProfileStack stack =
        profile_stack(trains, ctx.cfg.window,
                      profile_fft_size(ctx.cfg, trains.front().samples.size()),
                      s.range_lo, s.range_hi, ctx.threads);
    return form_image(stack, s.lambda_m, s.aperture_rad, ctx.cfg.slow_window,
                      static_cast<std::size_t>(ctx.cfg.slow_pad_factor));
}

json image_meta(const IsarImage& img, double floor_db) {
    json j;
    j["rows_range_bins"] = img.n_range;
    j["cols_cross_bins"] = img.n_cross;
    j["range_m"] = {img.range_axis_m.front(), img.range_axis_m.back()};
    j["cross_m"] = {img.cross_axis_m.front(), img.cross_axis_m.back()};
    j["dynamic_range_db"] = floor_db;
    j["center_wavelength_m"] = img.center_wavelength_m;
    j["aperture_angle_rad"] = img.aperture_angle_rad;
    return j;
}

// ---------------------------------------------------------------------------
// Modes
// ---------------------------------------------------------------------------

void run_profile_mode(RunContext& ctx) {
    std::vector<int> n_values = ctx.cfg.n_values;
    if (n_values.empty()) n_values = {ctx.cfg.plan.n_subpulses};

    json per_n = json::array();
    std::vector<std::vector<double>> peak_rows;
    for (int n : n_values) {
        const WaveformPlan plan = ctx.cfg.plan.with_subpulses(n);
        const auto trains =
            simulate_trains(ctx.cfg, plan, 1, ctx.cfg.has_gap,
                            ctx.cfg.has_gap && ctx.cfg.fill, ctx.threads);
        const SyntheticSignal& sig = trains.front();
        const RangeProfile prof = range_profile(
            sig, ctx.cfg.window, profile_fft_size(ctx.cfg, sig.samples.size()));
        const auto peaks = extract_peaks(prof, ctx.cfg.peak_min_separation_hz,
                                         ctx.cfg.peak_threshold_db);

        const std::string csv = "spectrum_n" + std::to_string(n) + ".csv";
        write_profile_csv(ctx.artifact(csv), prof);
        ctx.note_output(csv, "range_profile",
                        {{"n_used", n},
                         {"bin_hz", prof.bin_hz()},
                         {"units", "freq:Hz range:m mag:dB-rel-max"},
                         {"window", window_name(prof.window)}});
        if (ctx.cfg.format == "raw") {
            const std::string rawf = "synthetic_n" + std::to_string(n) + ".f64";
            write_raw_f64(ctx.artifact(rawf), sig.samples, sig.sample_rate_hz, 0.0);
            ctx.note_output(rawf, "synthetic_signal", {{"n_used", n}});

            // Pre-stitch sub-signal matrix of the first train.
            const SubSignalFrame frame =
                dechirp_frame(plan, ctx.cfg.scene, 0, ctx.cfg.sample_rate_hz);
            const std::string framef = "frame_n" + std::to_string(n) + ".f64";
            write_raw_f64(ctx.artifact(framef), frame.samples, frame.sample_rate_hz,
                          0.0, static_cast<std::size_t>(frame.n_rows));
            ctx.note_output(framef, "subsignal_frame",
                            {{"n_used", n}, {"rows", frame.n_rows}});
        }

        json jn;
        jn["n_used"] = n;
        jn["equivalent_bandwidth_hz"] = equivalent_bandwidth(plan);
        jn["n_peaks"] = peaks.size();
        json jp = json::array();
        for (const auto& p : peaks) {
            jp.push_back({{"freq_hz", p.freq_hz},
                          {"range_m", p.range_m},
                          {"magnitude_db", p.magnitude_db},
                          {"width_hz", p.width_hz}});
            peak_rows.push_back({static_cast<double>(n), p.freq_hz, p.range_m,
                                 p.magnitude_db, p.width_hz});
        }
        jn["peaks"] = jp;
        if (peaks.size() >= 2) {
            const double spacing = std::abs(peaks[0].freq_hz - peaks[1].freq_hz);
            jn["peak_spacing_hz"] = spacing;
            jn["peak_spacing_m"] = spacing * prof.range_per_hz();
        }
        if (!peaks.empty() && peaks[0].width_hz > 0.0) {
            jn["mainlobe_width_hz"] = peaks[0].width_hz;
            jn["measured_resolution_m"] =
                measured_resolution(peaks[0].width_hz, plan.chirp_rate());
        }
        per_n.push_back(jn);
        std::cout << "profile n=" << n << ": " << peaks.size() << " peak(s)\n";
    }
    write_table_csv(ctx.artifact("peaks.csv"),
                    "n_used,freq_hz,range_m,mag_db,width_hz", peak_rows);
    ctx.note_output("peaks.csv", "peak_table",
                    {{"units", "freq:Hz range:m mag:dB-rel-max width:Hz"}});
    ctx.report["results"]["per_n"] = per_n;
}

void run_sweep_mode(RunContext& ctx) {
    const int n_hi = ctx.cfg.n_max > 0 ? ctx.cfg.n_max : ctx.cfg.plan.n_subpulses;
    json table = json::array();
    std::vector<std::vector<double>> rows;
    for (int n = ctx.cfg.n_min; n <= n_hi; ++n) {
        const WaveformPlan plan = ctx.cfg.plan.with_subpulses(n);
        const auto trains = simulate_trains(ctx.cfg, plan, 1, false, false, ctx.threads);
        const SyntheticSignal& sig = trains.front();
        const RangeProfile prof = range_profile(
            sig, ctx.cfg.window, profile_fft_size(ctx.cfg, sig.samples.size()));

        std::size_t peak_bin = 0;
        double best = 0.0;
        for (std::size_t b = 0; b < prof.spectrum.size(); ++b) {
            const double m = std::abs(prof.spectrum[b]);
            if (m > best) {
                best = m;
                peak_bin = b;
            }
        }
        const double width = mainlobe_width_392(prof, peak_bin);
        const double res = measured_resolution(width, plan.chirp_rate());
        const double theory = theoretical_resolution(equivalent_bandwidth(plan));
        rows.push_back({static_cast<double>(n), equivalent_bandwidth(plan), width,
                        res, theory, res / theory});
        table.push_back({{"n_used", n},
                         {"equivalent_bandwidth_hz", equivalent_bandwidth(plan)},
                         {"mainlobe_width_hz", width},
                         {"measured_resolution_m", res},
                         {"theoretical_resolution_m", theory},
                         {"ratio", res / theory}});
        std::cout << "sweep n=" << n << ": width " << width / 1e3 << " kHz, resolution "
                  << res * 1e3 << " mm (theory " << theory * 1e3 << " mm)\n";
    }
    write_table_csv(
        ctx.artifact("resolution_vs_n.csv"),
        "n_used,b_eq_hz,width_hz,resolution_measured_m,resolution_theory_m,ratio",
        rows);
    ctx.note_output("resolution_vs_n.csv", "resolution_sweep",
                    {{"units", "b_eq:Hz width:Hz resolution:m"}});
    ctx.report["results"]["table"] = table;
}

void run_isar_mode(RunContext& ctx) {
    const WaveformPlan& plan = ctx.cfg.plan;
    const auto trains =
        simulate_trains(ctx.cfg, plan, ctx.cfg.n_trains, ctx.cfg.has_gap,
                        ctx.cfg.has_gap && ctx.cfg.fill, ctx.threads);
    const ImageSetup setup = image_setup(ctx.cfg, plan);
    const IsarImage img = make_isar_image(ctx, trains, setup);

    write_image_pgm(ctx.artifact("image.pgm"), img, ctx.cfg.image_floor_db);
    ctx.note_output("image.pgm", "isar_image", image_meta(img, ctx.cfg.image_floor_db));
    write_image_axes_csv(ctx.artifact("image_axes.csv"), img);
    ctx.note_output("image_axes.csv", "image_axes", {{"units", "value:m"}});

    std::size_t best = 0;
    for (std::size_t i = 0; i < img.pixels.size(); ++i) {
        if (std::abs(img.pixels[i]) > std::abs(img.pixels[best])) best = i;
    }
    json res;
    res["n_trains"] = ctx.cfg.n_trains;
    res["center_wavelength_m"] = setup.lambda_m;
    res["aperture_angle_rad"] = setup.aperture_rad;
    res["cross_range_resolution_m"] =
        cross_range_resolution(setup.lambda_m, setup.aperture_rad);
    res["range_resolution_m"] = theoretical_resolution(equivalent_bandwidth(plan));
    res["peak"] = {{"range_m", img.range_axis_m[best / img.n_cross]},
                   {"cross_m", img.cross_axis_m[best % img.n_cross]}};
    ctx.report["results"] = res;
    std::cout << "isar: " << ctx.cfg.n_trains << " trains, aperture "
              << setup.aperture_rad * 180.0 / 3.14159265358979 << " deg\n";
}

void run_gapfill_compare_mode(RunContext& ctx) {
    const WaveformPlan& plan = ctx.cfg.plan;
    const ImageSetup setup = image_setup(ctx.cfg, plan);

    const auto clean = simulate_trains(ctx.cfg, plan, ctx.cfg.n_trains, false, false,
                                       ctx.threads);
    const auto masked = simulate_trains(ctx.cfg, plan, ctx.cfg.n_trains, true, false,
                                        ctx.threads);
    const auto filled = simulate_trains(ctx.cfg, plan, ctx.cfg.n_trains, true, true,
                                        ctx.threads);

    const IsarImage img_clean = make_isar_image(ctx, clean, setup);
    const IsarImage img_masked = make_isar_image(ctx, masked, setup);
    const IsarImage img_filled = make_isar_image(ctx, filled, setup);

    for (const auto& [name, img] :
         {std::pair<const char*, const IsarImage*>{"image_clean.pgm", &img_clean},
          {"image_masked.pgm", &img_masked},
          {"image_filled.pgm", &img_filled}}) {
        write_image_pgm(ctx.artifact(name), *img, ctx.cfg.image_floor_db);
        ctx.note_output(name, "isar_image", image_meta(*img, ctx.cfg.image_floor_db));
    }
    write_image_axes_csv(ctx.artifact("image_axes.csv"), img_clean);
    ctx.note_output("image_axes.csv", "image_axes", {{"units", "value:m"}});

    const double corr_masked = image_correlation(img_masked, img_clean);
    const double corr_filled = image_correlation(img_filled, img_clean);
    ctx.report["results"] = {{"correlation_masked_vs_clean", corr_masked},
                             {"correlation_filled_vs_clean", corr_filled},
                             {"n_trains", ctx.cfg.n_trains},
                             {"aperture_angle_rad", setup.aperture_rad}};
    std::cout << "gapfill-compare: correlation masked " << corr_masked << ", filled "
              << corr_filled << "\n";
}

void run_transmit_mode(RunContext& ctx) {
    const SampledWaveform w =
        generate_transmit(ctx.cfg.plan, ctx.cfg.tx_sample_rate_hz, ctx.cfg.tx_trains);
    const Spectrogram sg =
        spectrogram(w, static_cast<std::size_t>(ctx.cfg.stft_window_len),
                    static_cast<std::size_t>(ctx.cfg.stft_hop));
    write_mag_pgm(ctx.artifact("stft.pgm"), sg.magnitude, sg.n_frames, sg.n_bins,
                  ctx.cfg.image_floor_db);
    ctx.note_output("stft.pgm", "spectrogram",
                    {{"rows_time_frames", sg.n_frames},
                     {"cols_freq_bins", sg.n_bins},
                     {"frame_step_s", sg.frame_step_s},
                     {"bin_hz", sg.bin_hz},
                     {"t0_s", sg.t0_s}});
    if (ctx.cfg.format == "raw") {
        write_raw_f64(ctx.artifact("waveform.f64"), w.samples, w.sample_rate_hz,
                      w.t0_s);
        ctx.note_output("waveform.f64", "transmit_waveform");
    }
    ctx.report["results"] = {{"n_samples", w.samples.size()},
                             {"sample_rate_hz", w.sample_rate_hz},
                             {"duration_s", w.samples.size() / w.sample_rate_hz}};
    std::cout << "transmit: " << w.samples.size() << " samples at "
              << w.sample_rate_hz / 1e9 << " GSa/s\n";
}

int check_constraints(const RunContext& ctx) {
    const PlanValidation v = validate_plan(ctx.cfg.plan);
    if (!v.ok()) {
        std::cerr << "plan constraint violations:\n";
        for (const auto& viol : v.violations) {
            std::cerr << "  [" << viol.id << "] " << viol.message << "\n";
        }
        return kExitConstraintError;
    }
    const std::string& mode = ctx.cfg.mode;
    if (mode != "transmit" && ctx.cfg.scene.scatterers.empty()) {
        std::cerr << "scene: no scatterers configured\n";
        return kExitConstraintError;
    }
    for (int n : ctx.cfg.n_values) {
        if (n < 1 || n > v.n_max) {
            std::cerr << "processing: n_values entry " << n << " outside [1, "
                      << v.n_max << "]\n";
            return kExitConstraintError;
        }
    }
    if (mode == "isar" || mode == "gapfill-compare") {
        if (ctx.cfg.scene.omega_rad_s <= 0.0 || ctx.cfg.n_trains < 2) {
            std::cerr << mode << " mode needs omega_deg_s > 0 and n_trains >= 2\n";
            return kExitConstraintError;
        }
    }
    if (mode == "gapfill-compare" && !ctx.cfg.has_gap) {
        std::cerr << "gapfill-compare mode needs an [interference] section\n";
        return kExitConstraintError;
    }
    return kExitOk;
}

}  // namespace

std::vector<SyntheticSignal> simulate_trains(const ScenarioConfig& cfg,
                                             const WaveformPlan& plan,
                                             int n_trains, bool with_gap,
                                             bool with_fill, int threads) {
    std::vector<SyntheticSignal> out(static_cast<std::size_t>(n_trains));
    parallel_for(static_cast<std::size_t>(n_trains), threads, [&](std::size_t m) {
        SubSignalFrame frame =
            dechirp_frame(plan, cfg.scene, static_cast<int>(m), cfg.sample_rate_hz);
        if (with_gap) {
            frame = apply_gap(std::move(frame), cfg.gap, plan).frame;
        }
        SyntheticSignal sig = stitch(frame, plan);
        if (with_gap && with_fill) sig = fill_gap(sig, cfg.ar_order);
        out[m] = std::move(sig);
    });
    return out;
}

int run_scenario(const std::string& config_path, const RunOptions& opts) {
    RunContext ctx;
    try {
        ctx.cfg = parse_config_file(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }
    ctx.config_path = config_path;
    if (!opts.mode.empty()) ctx.cfg.mode = opts.mode;
    if (!opts.out_dir.empty()) ctx.cfg.out_dir = opts.out_dir;
    if (!opts.format.empty()) ctx.cfg.format = opts.format;
    if (opts.seed) ctx.cfg.scene.rng_seed = *opts.seed;
    if (opts.n_min) ctx.cfg.n_min = *opts.n_min;
    if (opts.n_max) ctx.cfg.n_max = *opts.n_max;
    ctx.threads = opts.threads;
    ctx.out_dir = ctx.cfg.out_dir;

    if (ctx.cfg.mode == "validate") return validate_scenario(config_path);

    if (const int rc = check_constraints(ctx); rc != kExitOk) return rc;

    try {
        fs::create_directories(ctx.out_dir);
        ctx.report["config"] = {{"path", config_path},
                                {"hash", file_hash_hex(config_path)}};
        ctx.report["mode"] = ctx.cfg.mode;
        ctx.report["seed"] = ctx.cfg.scene.rng_seed;
        ctx.report["plan"] = plan_summary(ctx.cfg.plan);

        const auto t0 = std::chrono::steady_clock::now();
        if (ctx.cfg.mode == "profile") run_profile_mode(ctx);
        else if (ctx.cfg.mode == "sweep") run_sweep_mode(ctx);
        else if (ctx.cfg.mode == "isar") run_isar_mode(ctx);
        else if (ctx.cfg.mode == "gapfill-compare") run_gapfill_compare_mode(ctx);
        else if (ctx.cfg.mode == "transmit") run_transmit_mode(ctx);
        const auto t1 = std::chrono::steady_clock::now();

        ctx.report["outputs"] = ctx.outputs;
        std::ofstream rep(ctx.artifact("report.json"), std::ios::trunc);
        rep << ctx.report.dump(2) << '\n';
        std::cout << "wrote " << ctx.artifact("report.json") << " ("
                  << std::chrono::duration<double>(t1 - t0).count() << " s)\n";
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}

int validate_scenario(const std::string& config_path) {
    ScenarioConfig cfg;
    try {
        cfg = parse_config_file(config_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }

    const PlanValidation v = validate_plan(cfg.plan);
    if (v.ok()) {
        const double b_eq = equivalent_bandwidth(cfg.plan);
        const BandSpan band = synthesized_band(cfg.plan);
        std::printf("plan: valid, M=%d, N_max=%d, B_eq=%.4g GHz, R_theory=%.3g mm\n",
                    v.m_ratio, v.n_max, b_eq / 1e9,
                    theoretical_resolution(b_eq) * 1e3);
        std::printf("band: %.4g-%.4g GHz, chirp rate %.6g Hz/s\n", band.lo_hz / 1e9,
                    band.hi_hz / 1e9, cfg.plan.chirp_rate());
        for (int n = 0; n < cfg.plan.n_subpulses; ++n) {
            std::printf("  subpulse %d: %.4g-%.4g GHz\n", n,
                        subpulse_band_lo(cfg.plan, n) / 1e9,
                        subpulse_band_hi(cfg.plan, n) / 1e9);
        }
        if (cfg.has_gap && cfg.gap.band_hz) {
            const auto masked = masked_subpulses(cfg.plan, cfg.gap.band_hz->first,
                                                 cfg.gap.band_hz->second);
            std::printf("interference masks %zu subpulse(s):", masked.size());
            for (int n : masked) std::printf(" %d", n);
            std::printf("\n");
        }
        std::printf("scene: %zu scatterer(s), center range %.3g m\n",
                    cfg.scene.scatterers.size(), cfg.scene.center_range_m);
        return kExitOk;
    }
    std::printf("plan: INVALID (%zu violation(s))\n", v.violations.size());
    for (const auto& viol : v.violations) {
        std::printf("  [%s] %s\n", viol.id.c_str(), viol.message.c_str());
    }
    return kExitConstraintError;
}

}  // namespace stepchirp
