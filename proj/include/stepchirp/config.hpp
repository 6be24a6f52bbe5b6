// config.hpp - scenario file parsing (strict sectioned key-value format)
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stepchirp/plan.hpp"
#include "stepchirp/scene.hpp"
#include "stepchirp/windows.hpp"

namespace stepchirp {

/// Parse failure with file/line context; maps to exit code 2 in the CLI.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& origin, int line, const std::string& what)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + what) {}
};

/// Everything a run needs, straight from one scenario file. Unknown sections
/// or keys are rejected so typos cannot silently change an experiment.
struct ScenarioConfig {
    WaveformPlan plan;

    // scene
    Scene scene;

    // receiver
    double sample_rate_hz = 100e6;

    // interference
    bool has_gap = false;
    GapSpec gap;
    bool fill = true;
    int ar_order = 0;  // 0 = automatic

    // processing
    std::string mode = "profile";  // profile|sweep|isar|gapfill-compare|transmit
    Window window = Window::rect;
    Window slow_window = Window::hann;
    int fft_pad_factor = 8;
    int slow_pad_factor = 4;
    std::vector<int> n_values;  // subpulse counts for profile mode
    int n_trains = 1;
    int n_min = 1;
    int n_max = 0;  // 0 = plan.n_subpulses
    double range_window_m = 0.0;  // half-width of the range crop; 0 = full
    double peak_threshold_db = -6.0;
    double peak_min_separation_hz = 10e3;
    double tx_sample_rate_hz = 80e9;
    int tx_trains = 1;
    int stft_window_len = 4096;
    int stft_hop = 1024;

    // output
    std::string out_dir = "out";
    std::string format = "csv";  // csv|raw
    double image_floor_db = 40.0;
};

ScenarioConfig parse_config_file(const std::string& path);
ScenarioConfig parse_config_text(const std::string& text, const std::string& origin);

}  // namespace stepchirp
