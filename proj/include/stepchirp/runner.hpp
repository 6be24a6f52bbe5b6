// runner.hpp - scenario orchestration: pipelines, artifacts, run reports
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stepchirp/config.hpp"
#include "stepchirp/synth.hpp"

namespace stepchirp {

struct RunOptions {
    std::string out_dir;                 // empty = take from the config
    std::optional<std::uint64_t> seed;   // overrides [receiver] rng_seed
    int threads = 1;
    std::string format;                  // empty = take from the config
    std::string mode;                    // empty = take from the config
    std::optional<int> n_min;            // sweep bounds override
    std::optional<int> n_max;
};

// Exit codes shared by the library entry points and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitConstraintError = 3;
inline constexpr int kExitNumericalError = 4;

/// Runs one scenario end to end and writes its artifacts plus report.json
/// into the output directory. Prints progress to stdout, diagnostics to
/// stderr; returns one of the exit codes above.
int run_scenario(const std::string& config_path, const RunOptions& opts);

/// Parses and checks the plan/scene only; prints the constraint table and
/// derived quantities.
int validate_scenario(const std::string& config_path);

/// Per-train simulation chain shared by the pipelines: de-chirp, optional
/// interference masking, stitch, optional AR gap fill.
std::vector<SyntheticSignal> simulate_trains(const ScenarioConfig& cfg,
                                             const WaveformPlan& plan,
                                             int n_trains, bool with_gap,
                                             bool with_fill, int threads);

}  // namespace stepchirp
