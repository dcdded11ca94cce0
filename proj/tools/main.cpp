/* Copyright (C) 2026 csnsim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * Command-line front end. All simulation work goes through the public C API
 * in csnsim.h; this file only handles argument parsing and file plumbing.
 */
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "csnsim.h"

namespace {

/// Exit codes shared with the C API: 0 ok, 2 bad configuration or usage,
/// 3 runtime failure.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

int report(csn_status st)
{
    if (st != CSN_OK) std::cerr << "error: " << csn_last_error() << '\n';
    return static_cast<int>(st);
}

int fail_config(const std::string& msg)
{
    std::cerr << "error: " << msg << '\n';
    return kExitConfig;
}

/// Owns a csn_config handle.
struct ConfigHandle {
    csn_config* ptr = nullptr;
    ~ConfigHandle() { csn_config_free(ptr); }
};

/// Owns a csn_result handle.
struct ResultHandle {
    csn_result* ptr = nullptr;
    ~ResultHandle() { csn_result_free(ptr); }
};

/// Owns a string allocated by the library.
struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { csn_string_free(ptr); }
};

/// Options shared by `run` and `sweep`.
struct RunArgs {
    std::string config_path;
    std::string preset;
    std::string out_dir;
    std::uint64_t seed = 0;
    int replicas = 0;
    int jobs = 0;
    int snapshot_every = 0;
    std::vector<std::string> sets;
    CLI::App* cmd = nullptr;
};

void add_run_options(CLI::App& app, RunArgs& args, const char* what)
{
    args.cmd = &app;
    auto* config =
        app.add_option("--config", args.config_path, "Scenario config file");
    auto* preset =
        app.add_option("--preset", args.preset, "Bundled scenario preset name");
    config->excludes(preset);
    app.add_option("--seed", args.seed, "Master seed override");
    app.add_option("--replicas", args.replicas, "Replica count override");
    app.add_option("--jobs", args.jobs, "Worker thread count override");
    app.add_option("--snapshot-every", args.snapshot_every,
                   "Snapshot cadence override (0 disables snapshots)");
    app.add_option("--set", args.sets,
                   "Extra 'section.key=value' overrides (repeatable)")
        ->type_name("KEY=VALUE");
    app.add_option("--out", args.out_dir, what)->required();
}

/// Loads the config and applies the command-line overrides in order.
int load_config(const RunArgs& args, ConfigHandle& cfg)
{
    if (!args.config_path.empty()) {
        const csn_status st = csn_config_load(args.config_path.c_str(), &cfg.ptr);
        if (st != CSN_OK) return report(st);
    } else if (!args.preset.empty()) {
        const csn_status st = csn_config_from_preset(args.preset.c_str(), &cfg.ptr);
        if (st != CSN_OK) return report(st);
    } else {
        return fail_config("one of --config or --preset is required");
    }
    auto set = [&cfg](const char* key, const std::string& value) {
        return report(csn_config_set(cfg.ptr, key, value.c_str()));
    };
    if (args.cmd->count("--seed") != 0u)
        if (int rc = set("ensemble.seed", std::to_string(args.seed))) return rc;
    if (args.cmd->count("--replicas") != 0u)
        if (int rc = set("ensemble.replicas", std::to_string(args.replicas)))
            return rc;
    if (args.cmd->count("--jobs") != 0u)
        if (int rc = set("ensemble.jobs", std::to_string(args.jobs))) return rc;
    if (args.cmd->count("--snapshot-every") != 0u)
        if (int rc = set("ensemble.snapshot_every",
                         std::to_string(args.snapshot_every)))
            return rc;
    for (const std::string& kv : args.sets) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos)
            return fail_config("--set expects section.key=value, got '" + kv + "'");
        if (int rc = set(kv.substr(0, eq).c_str(), kv.substr(eq + 1))) return rc;
    }
    return kExitOk;
}

int write_text(const std::filesystem::path& path, const char* text)
{
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write " << path << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

int cmd_run(const RunArgs& args)
{
    ConfigHandle cfg;
    if (int rc = load_config(args, cfg)) return rc;
    ResultHandle res;
    if (csn_status st = csn_run(cfg.ptr, &res.ptr); st != CSN_OK)
        return report(st);
    if (csn_status st = csn_result_export(res.ptr, args.out_dir.c_str());
        st != CSN_OK)
        return report(st);
    std::cerr << "exported " << args.out_dir << '\n';
    return kExitOk;
}

int cmd_sweep(const RunArgs& args)
{
    ConfigHandle cfg;
    if (int rc = load_config(args, cfg)) return rc;
    if (csn_status st = csn_sweep(cfg.ptr, args.out_dir.c_str()); st != CSN_OK)
        return report(st);
    std::cerr << "exported sweep under " << args.out_dir << '\n';
    return kExitOk;
}

struct AnalyzeArgs {
    std::string run_dir;
    std::string baseline_dir;
    std::string metric = "kd_general_comment";
    double lam = 0.05;
    std::uint64_t seed = 1;
    std::string out_dir;
};

int cmd_analyze(const AnalyzeArgs& args)
{
    namespace fs = std::filesystem;
    const fs::path out(args.out_dir);

    if (!args.baseline_dir.empty()) {
        StringHandle csv;
        if (csn_status st =
                csn_analyze_ratio(args.run_dir.c_str(), args.baseline_dir.c_str(),
                                  args.metric.c_str(), &csv.ptr);
            st != CSN_OK)
            return report(st);
        if (int rc = write_text(out / ("ratio_" + args.metric + ".csv"), csv.ptr))
            return rc;
    }

    {
        StringHandle csv;
        if (csn_status st = csn_analyze_quantile_diff(args.run_dir.c_str(), &csv.ptr);
            st != CSN_OK)
            return report(st);
        if (int rc = write_text(out / "quantile_diff.csv", csv.ptr)) return rc;
    }

    {
        StringHandle csv;
        if (csn_status st = csn_analyze_denoise(args.run_dir.c_str(),
                                                args.metric.c_str(), args.lam,
                                                &csv.ptr);
            st != CSN_OK)
            return report(st);
        if (int rc = write_text(out / ("denoised_" + args.metric + ".csv"), csv.ptr))
            return rc;
    }

    if (fs::exists(fs::path(args.run_dir) / "profiles.csv")) {
        StringHandle csv;
        if (csn_status st =
                csn_analyze_project(args.run_dir.c_str(), args.seed, &csv.ptr);
            st != CSN_OK)
            return report(st);
        if (int rc = write_text(out / "trajectory.csv", csv.ptr)) return rc;
    }

    std::cerr << "analyzed " << args.run_dir << " into " << args.out_dir << '\n';
    return kExitOk;
}

int cmd_presets(const std::string& name)
{
    if (name.empty()) {
        for (int i = 0; i < csn_preset_count(); ++i)
            std::cout << csn_preset_name(i) << '\n';
        return kExitOk;
    }
    ConfigHandle cfg;
    if (csn_status st = csn_config_from_preset(name.c_str(), &cfg.ptr);
        st != CSN_OK)
        return report(st);
    StringHandle text;
    if (csn_status st = csn_config_dump(cfg.ptr, &text.ptr); st != CSN_OK)
        return report(st);
    std::cout << text.ptr;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "Deterministic ensemble simulator of collective attention dynamics in "
        "online news communities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", csn_version());

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Run an ensemble and export it");
    add_run_options(*run, run_args, "Output directory");

    RunArgs sweep_args;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Run every point of the [sweep] grid");
    add_run_options(*sweep, sweep_args, "Output root directory");

    AnalyzeArgs an;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Post-process exported run directories");
    analyze->add_option("--run", an.run_dir, "Exported run directory")->required();
    analyze->add_option("--baseline", an.baseline_dir,
                        "Baseline run directory for ratio curves");
    analyze->add_option("--metric", an.metric,
                        "Metric for ratio and denoising tables");
    analyze->add_option("--lam", an.lam, "Total-variation denoising penalty");
    analyze->add_option("--seed", an.seed, "Seed for the planar projection");
    analyze->add_option("--out", an.out_dir, "Output directory")->required();

    std::string preset_name;
    CLI::App* presets =
        app.add_subcommand("presets", "List bundled presets or print one");
    presets->add_option("name", preset_name, "Preset to print in full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    if (run->parsed()) return cmd_run(run_args);
    if (sweep->parsed()) return cmd_sweep(sweep_args);
    if (analyze->parsed()) return cmd_analyze(an);
    if (presets->parsed()) return cmd_presets(preset_name);
    return fail_config("no subcommand given");
}
