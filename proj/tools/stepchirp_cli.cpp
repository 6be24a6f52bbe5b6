// stepchirp_cli.cpp - scenario-driven command-line front end
#include <cstdint>
#include <string>

#include <CLI11.hpp>

#include "stepchirp/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"stepchirp: frequency-stepped chirp radar simulator and toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    stepchirp::RunOptions opts;
    std::uint64_t seed = 0;
    int n_min = 0;
    int n_max = 0;

    auto add_common = [&](CLI::App* sub, bool with_run_flags) {
        sub->add_option("config", config_path, "scenario config file")
            ->required()
            ->check(CLI::ExistingFile);
        if (with_run_flags) {
            sub->add_option("--out-dir", opts.out_dir, "output directory override");
            sub->add_option("--seed", seed, "noise seed override");
            sub->add_option("--threads", opts.threads,
                            "worker threads (0 = hardware)");
            sub->add_option("--format", opts.format, "csv or raw")
                ->check(CLI::IsMember({"csv", "raw"}));
        }
    };

    CLI::App* validate = app.add_subcommand("validate", "check a scenario's plan");
    add_common(validate, false);

    CLI::App* run = app.add_subcommand("run", "run the scenario's configured mode");
    add_common(run, true);

    CLI::App* sweep =
        app.add_subcommand("sweep-resolution", "resolution vs. subpulse count");
    add_common(sweep, true);
    sweep->add_option("--n-min", n_min, "first subpulse count");
    sweep->add_option("--n-max", n_max, "last subpulse count");

    CLI::App* isar = app.add_subcommand("isar", "form an ISAR image");
    add_common(isar, true);

    CLI::App* gapfill = app.add_subcommand(
        "gapfill", "compare clean / interference-masked / AR-filled images");
    add_common(gapfill, true);

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return stepchirp::validate_scenario(config_path);
    for (const auto* sub : {run, sweep, isar, gapfill}) {
        if (sub->parsed() && sub->count("--seed") > 0) opts.seed = seed;
    }
    if (sweep->parsed()) {
        opts.mode = "sweep";
        if (n_min > 0) opts.n_min = n_min;
        if (n_max > 0) opts.n_max = n_max;
    }
    if (isar->parsed()) opts.mode = "isar";
    if (gapfill->parsed()) opts.mode = "gapfill-compare";
    return stepchirp::run_scenario(config_path, opts);
}
