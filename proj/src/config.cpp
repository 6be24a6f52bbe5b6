#include "stepchirp/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

namespace stepchirp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || !std::isfinite(v)) {
        throw ConfigError(origin, line, "key '" + key + "': not a number: '" + value + "'");
    }
    return v;
}

int parse_int(const std::string& origin, int line, const std::string& key,
              const std::string& value) {
    const double v = parse_double(origin, line, key, value);
    if (v != std::floor(v) || std::abs(v) > 1e9) {
        throw ConfigError(origin, line, "key '" + key + "': not an integer: '" + value + "'");
    }
    return static_cast<int>(v);
}

bool parse_bool(const std::string& origin, int line, const std::string& key,
                const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError(origin, line, "key '" + key + "': not a boolean: '" + value + "'");
}

std::vector<double> parse_numbers(const std::string& origin, int line,
                                  const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::istringstream ss(value);
    std::string tok;
    while (ss >> tok) out.push_back(parse_double(origin, line, key, tok));
    if (out.empty()) throw ConfigError(origin, line, "key '" + key + "': empty list");
    return out;
}

struct SceneSpec {
    std::string generator;  // point|two_target|v_target or "" for explicit list
    double separation_m = 8.5e-3;
    double side_m = 0.098;
    double angle_deg = 53.0;
    double spacing_m = 0.01;
    double x_m = 0.0;
    double y_m = 0.0;
    std::vector<Scatterer> scatterers;
};

}  // namespace

ScenarioConfig parse_config_text(const std::string& text, const std::string& origin) {
    ScenarioConfig cfg;
    SceneSpec scene_spec;
    std::set<std::string> plan_seen;
    std::optional<double> snr_db;
    double omega_deg_s = 0.0;
    std::uint64_t rng_seed = 1;
    double center_range_m = 1.5;
    double band_lo = 0.0;
    double band_hi = 0.0;
    std::vector<int> mask_indices;

    std::istringstream stream(text);
    std::string raw;
    std::string section;
    int line_no = 0;

    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(origin, line_no, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            static const std::set<std::string> known = {
                "plan", "scene", "receiver", "interference", "processing", "output"};
            if (!known.count(section)) {
                throw ConfigError(origin, line_no, "unknown section '" + section + "'");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(origin, line_no, "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError(origin, line_no, "empty key or value");
        }
        if (section.empty()) throw ConfigError(origin, line_no, "key outside any section");

        auto num = [&] { return parse_double(origin, line_no, key, value); };
        auto integer = [&] { return parse_int(origin, line_no, key, value); };

        if (section == "plan") {
            plan_seen.insert(key);
            if (key == "f_start_hz") cfg.plan.f_start_hz = num();
            else if (key == "b_chirp_hz") cfg.plan.b_chirp_hz = num();
            else if (key == "t_cw_s") cfg.plan.t_cw_s = num();
            else if (key == "t_cr_s") cfg.plan.t_cr_s = num();
            else if (key == "t_loop_s") cfg.plan.t_loop_s = num();
            else if (key == "t_pr_s") cfg.plan.t_pr_s = num();
            else if (key == "t_pw_s") cfg.plan.t_pw_s = num();
            else if (key == "delta_f_hz") cfg.plan.delta_f_hz = num();
            else if (key == "f_offset_hz") cfg.plan.f_offset_hz = num();
            else if (key == "b_obpf_hz") cfg.plan.b_obpf_hz = num();
            else if (key == "n_subpulses") cfg.plan.n_subpulses = integer();
            else throw ConfigError(origin, line_no, "unknown [plan] key '" + key + "'");
        } else if (section == "scene") {
            if (key == "generator") scene_spec.generator = value;
            else if (key == "separation_m") scene_spec.separation_m = num();
            else if (key == "side_m") scene_spec.side_m = num();
            else if (key == "angle_deg") scene_spec.angle_deg = num();
            else if (key == "spacing_m") scene_spec.spacing_m = num();
            else if (key == "x_m") scene_spec.x_m = num();
            else if (key == "y_m") scene_spec.y_m = num();
            else if (key == "scatterer") {
                const auto v = parse_numbers(origin, line_no, key, value);
                if (v.size() != 3) {
                    throw ConfigError(origin, line_no, "scatterer needs 'x_m y_m reflectivity'");
                }
                scene_spec.scatterers.push_back({v[0], v[1], v[2]});
            } else if (key == "center_range_m") center_range_m = num();
            else if (key == "omega_deg_s") omega_deg_s = num();
            else throw ConfigError(origin, line_no, "unknown [scene] key '" + key + "'");
        } else if (section == "receiver") {
            if (key == "sample_rate_hz") cfg.sample_rate_hz = num();
            else if (key == "snr_db") snr_db = num();
            else if (key == "rng_seed") rng_seed = static_cast<std::uint64_t>(integer());
            else throw ConfigError(origin, line_no, "unknown [receiver] key '" + key + "'");
        } else if (section == "interference") {
            if (key == "band_lo_hz") { band_lo = num(); cfg.has_gap = true; }
            else if (key == "band_hi_hz") { band_hi = num(); cfg.has_gap = true; }
            else if (key == "mask_indices") {
                for (double v : parse_numbers(origin, line_no, key, value)) {
                    mask_indices.push_back(static_cast<int>(v));
                }
                cfg.has_gap = true;
            } else if (key == "ar_order") cfg.ar_order = integer();
            else if (key == "fill") cfg.fill = parse_bool(origin, line_no, key, value);
            else throw ConfigError(origin, line_no, "unknown [interference] key '" + key + "'");
        } else if (section == "processing") {
            if (key == "mode") cfg.mode = value;
            else if (key == "window" || key == "slow_time_window") {
                Window w = Window::rect;
                try {
                    w = window_from_name(value);
                } catch (const std::invalid_argument& e) {
                    throw ConfigError(origin, line_no, e.what());
                }
                (key == "window" ? cfg.window : cfg.slow_window) = w;
            }
            else if (key == "fft_pad_factor") cfg.fft_pad_factor = integer();
            else if (key == "slow_pad_factor") cfg.slow_pad_factor = integer();
            else if (key == "n_values") {
                for (double v : parse_numbers(origin, line_no, key, value)) {
                    cfg.n_values.push_back(static_cast<int>(v));
                }
            } else if (key == "n_trains") cfg.n_trains = integer();
            else if (key == "n_min") cfg.n_min = integer();
            else if (key == "n_max") cfg.n_max = integer();
            else if (key == "range_window_m") cfg.range_window_m = num();
            else if (key == "peak_threshold_db") cfg.peak_threshold_db = num();
            else if (key == "peak_min_separation_hz") cfg.peak_min_separation_hz = num();
            else if (key == "tx_sample_rate_hz") cfg.tx_sample_rate_hz = num();
            else if (key == "tx_trains") cfg.tx_trains = integer();
            else if (key == "stft_window_len") cfg.stft_window_len = integer();
            else if (key == "stft_hop") cfg.stft_hop = integer();
            else throw ConfigError(origin, line_no, "unknown [processing] key '" + key + "'");
        } else if (section == "output") {
            if (key == "directory") cfg.out_dir = value;
            else if (key == "format") {
                if (value != "csv" && value != "raw") {
                    throw ConfigError(origin, line_no, "format must be csv or raw");
                }
                cfg.format = value;
            } else if (key == "image_floor_db") cfg.image_floor_db = num();
            else throw ConfigError(origin, line_no, "unknown [output] key '" + key + "'");
        }
    }

    static const char* required_plan[] = {
        "f_start_hz", "b_chirp_hz", "t_cw_s",     "t_cr_s",     "t_loop_s", "t_pr_s",
        "t_pw_s",     "delta_f_hz", "f_offset_hz", "b_obpf_hz", "n_subpulses"};
    for (const char* k : required_plan) {
        if (!plan_seen.count(k)) {
            throw ConfigError(origin, line_no, std::string("missing required [plan] key '") + k + "'");
        }
    }

    static const std::set<std::string> modes = {"validate", "profile", "sweep",
                                                "isar", "gapfill-compare", "transmit"};
    if (!modes.count(cfg.mode)) {
        throw ConfigError(origin, line_no, "unknown mode '" + cfg.mode + "'");
    }

    // Build the scene.
    if (scene_spec.generator == "two_target") {
        cfg.scene = make_two_target_scene(scene_spec.separation_m, center_range_m);
    } else if (scene_spec.generator == "v_target") {
        cfg.scene = make_v_scene(scene_spec.side_m, scene_spec.angle_deg,
                                 scene_spec.spacing_m, center_range_m);
    } else if (scene_spec.generator == "point") {
        cfg.scene.scatterers = {{scene_spec.x_m, scene_spec.y_m, 1.0}};
        cfg.scene.center_range_m = center_range_m;
    } else if (scene_spec.generator.empty()) {
        cfg.scene.scatterers = scene_spec.scatterers;
        cfg.scene.center_range_m = center_range_m;
    } else {
        throw ConfigError(origin, line_no,
                          "unknown scene generator '" + scene_spec.generator + "'");
    }
    cfg.scene.omega_rad_s = omega_deg_s * std::numbers::pi / 180.0;
    cfg.scene.snr_db = snr_db;
    cfg.scene.rng_seed = rng_seed;

    if (cfg.has_gap) {
        if (!mask_indices.empty()) {
            cfg.gap.indices = mask_indices;
        } else {
            if (!(band_lo < band_hi)) {
                throw ConfigError(origin, line_no,
                                  "interference band needs band_lo_hz < band_hi_hz");
            }
            cfg.gap.band_hz = {band_lo, band_hi};
        }
    }
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path, 0, "cannot open file");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), path);
}

}  // namespace stepchirp
