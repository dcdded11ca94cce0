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
 */
#include "csnsim/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "csnsim/errors.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"
#include "csnsim/textio.hpp"
#include "csnsim/version.hpp"

namespace csn {

namespace {

std::string metrics_csv(const EnsembleResult& ens)
{
    std::string out = "step,metric,mean,std,n\n";
    const std::vector<std::string>& names = metric_names();
    for (int t = 0; t < ens.horizon; ++t)
        for (std::size_t m = 0; m < names.size(); ++m) {
            const EnsembleStat& st = ens.metric_stats[m];
            out += std::to_string(t) + ',' + names[m] + ',' +
                   fmt17(st.mean[static_cast<std::size_t>(t)]) + ',' +
                   fmt17(st.stdev[static_cast<std::size_t>(t)]) + ',' +
                   std::to_string(st.n) + '\n';
        }
    return out;
}

std::string scalars_csv(const EnsembleResult& ens)
{
    std::string out = "metric,mean,std,n\n";
    for (const auto& [name, st] : ens.scalar_stats)
        out += name + ',' + fmt17(st.mean) + ',' + fmt17(st.stdev) + ',' +
               std::to_string(st.n) + '\n';
    return out;
}

std::string profiles_csv(const EnsembleResult& ens)
{
    std::string out = "step,topic,mean\n";
    for (std::size_t t = 0; t < ens.mean_profiles.size(); ++t)
        for (std::size_t i = 0; i < ens.mean_profiles[t].size(); ++i)
            out += std::to_string(t) + ',' + std::to_string(i + 1) + ',' +
                   fmt17(ens.mean_profiles[t][i]) + '\n';
    return out;
}

std::string snapshot_name(const char* stem, int step)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "snapshots/%s_%05d.csv", stem, step);
    return buf;
}

} // namespace

std::string content_digest(const std::string& bytes)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::vector<std::pair<std::string, std::string>> export_files(
    const EnsembleResult& ens, const ScenarioConfig& cfg)
{
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("config.ini", canonical_config_text(cfg));
    files.emplace_back("metrics.csv", metrics_csv(ens));
    files.emplace_back("scalars.csv", scalars_csv(ens));
    if (!ens.mean_profiles.empty())
        files.emplace_back("profiles.csv", profiles_csv(ens));
    for (const auto& [step, net] : ens.first_replica.snapshots) {
        std::ostringstream freq;
        write_frequency_table(net, freq);
        files.emplace_back(snapshot_name("frequencies", step), freq.str());
        std::ostringstream wt;
        write_weight_table(net, wt);
        files.emplace_back(snapshot_name("weights", step), wt.str());
    }

    std::string manifest = "format = csnsim-manifest-1\n";
    manifest += "scenario = " + cfg.name + "\n";
    manifest += "version = " + std::string(kVersion) + "\n";
    manifest += "master_seed = " + std::to_string(cfg.seed) + "\n";
    manifest += "replicas = " + std::to_string(ens.n_replicas) + "\n";
    manifest += "horizon = " + std::to_string(ens.horizon) + "\n";
    for (const auto& [key, value] : canonical_config_items(cfg))
        manifest += "param." + key + " = " + value + "\n";
    for (const auto& [path, content] : files)
        manifest += "digest." + path + " = " + content_digest(content) + "\n";
    files.emplace_back("manifest.txt", std::move(manifest));
    return files;
}

void export_results(const EnsembleResult& ens, const ScenarioConfig& cfg,
                    const std::string& out_dir)
{
    for (const auto& [path, content] : export_files(ens, cfg))
        write_file(out_dir + "/" + path, content);
}

std::string trajectory_csv(const Trajectory& traj)
{
    std::string out = "step,x,y,smoothed_x,smoothed_y\n";
    for (std::size_t t = 0; t < traj.x.size(); ++t)
        out += std::to_string(t) + ',' + fmt17(traj.x[t]) + ',' +
               fmt17(traj.y[t]) + ',' + fmt17(traj.smooth_x[t]) + ',' +
               fmt17(traj.smooth_y[t]) + '\n';
    return out;
}

EnsembleResult run_configured(const ScenarioConfig& cfg)
{
    RunOptions opts;
    opts.snapshot_every = cfg.snapshot_every;
    opts.want_snapshots = cfg.snapshot_every > 0;
    opts.track_profiles = true;
    return run_ensemble(cfg.scenario, cfg.replicas, cfg.seed, cfg.jobs, opts);
}

void run_and_export(const ScenarioConfig& cfg, const std::string& out_dir)
{
    export_results(run_configured(cfg), cfg, out_dir);
}

namespace {

/// Short decimal form for directory names only; stored configs stay exact.
std::string fmtg(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

} // namespace

std::vector<std::string> sweep_and_export(const ScenarioConfig& cfg,
                                          const std::string& out_root)
{
    if (!cfg.sweep.strength.empty() && cfg.scenario.schedule.empty())
        throw ConfigError("sweep strength values need at least one [influence] window");
    const bool has_lf = !cfg.sweep.lambda_f.empty();
    const bool has_lm = !cfg.sweep.lambda_m.empty();
    const bool has_s = !cfg.sweep.strength.empty();
    const std::vector<double> one{0.0};
    const std::vector<double>& lfs = has_lf ? cfg.sweep.lambda_f : one;
    const std::vector<double>& lms = has_lm ? cfg.sweep.lambda_m : one;
    const std::vector<double>& ss = has_s ? cfg.sweep.strength : one;

    std::vector<std::string> dirs;
    for (double lf : lfs)
        for (double lm : lms)
            for (double s : ss) {
                ScenarioConfig sub = cfg;
                sub.sweep = SweepLists{};
                std::string name;
                if (has_lf) {
                    sub.scenario.model.lambda_f = lf;
                    name += "lf" + fmtg(lf);
                }
                if (has_lm) {
                    sub.scenario.model.lambda_m = lm;
                    if (!name.empty()) name += '_';
                    name += "lm" + fmtg(lm);
                }
                if (has_s) {
                    for (InfluenceEntry& e : sub.scenario.schedule) e.strength = s;
                    if (!name.empty()) name += '_';
                    name += "s" + fmtg(s);
                }
                if (name.empty()) name = "base";
                sub.name = cfg.name + "/" + name;
                validate_config(sub);
                run_and_export(sub, out_root + "/" + name);
                dirs.push_back(name);
            }
    return dirs;
}

namespace {

const EnsembleStat& stat_or_throw(const LoadedMetrics& lm, const std::string& metric,
                                  const std::string& dir)
{
    auto it = lm.stats.find(metric);
    if (it == lm.stats.end())
        throw RuntimeError("metric '" + metric + "' not found in " + dir +
                           "/metrics.csv");
    return it->second;
}

LoadedMetrics load_dir_metrics(const std::string& dir)
{
    return parse_metrics_csv(read_file(dir + "/metrics.csv"));
}

} // namespace

std::string ratio_csv_from_dirs(const std::string& run_dir,
                                const std::string& baseline_dir,
                                const std::string& metric)
{
    const LoadedMetrics run = load_dir_metrics(run_dir);
    const LoadedMetrics base = load_dir_metrics(baseline_dir);
    const RatioSeries r = ensemble_ratio(stat_or_throw(run, metric, run_dir),
                                         stat_or_throw(base, metric, baseline_dir));
    std::string out = "step,ratio,band\n";
    for (std::size_t t = 0; t < r.ratio.size(); ++t)
        out += std::to_string(t) + ',' + fmt17(r.ratio[t]) + ',' +
               fmt17(r.band[t]) + '\n';
    return out;
}

std::string quantile_diff_csv_from_dir(const std::string& run_dir)
{
    const LoadedMetrics run = load_dir_metrics(run_dir);
    const EnsembleStat& top = stat_or_throw(run, "w_target_top20", run_dir);
    const EnsembleStat& bot = stat_or_throw(run, "w_target_bot20", run_dir);
    std::string out = "step,top_mean,bottom_mean,diff,band\n";
    for (std::size_t t = 0; t < top.mean.size(); ++t) {
        const double band =
            std::sqrt(top.stdev[t] * top.stdev[t] + bot.stdev[t] * bot.stdev[t]);
        out += std::to_string(t) + ',' + fmt17(top.mean[t]) + ',' +
               fmt17(bot.mean[t]) + ',' + fmt17(top.mean[t] - bot.mean[t]) + ',' +
               fmt17(band) + '\n';
    }
    return out;
}

std::string denoise_csv_from_dir(const std::string& run_dir,
                                 const std::string& metric, double lam)
{
    const LoadedMetrics run = load_dir_metrics(run_dir);
    const EnsembleStat& st = stat_or_throw(run, metric, run_dir);
    const std::vector<double> smooth = tv_denoise(st.mean, lam);
    std::string out = "step,raw,denoised\n";
    for (std::size_t t = 0; t < st.mean.size(); ++t)
        out += std::to_string(t) + ',' + fmt17(st.mean[t]) + ',' +
               fmt17(smooth[t]) + '\n';
    return out;
}

std::string trajectory_csv_from_dir(const std::string& run_dir,
                                    std::uint64_t seed)
{
    const std::vector<std::vector<double>> profiles =
        parse_profiles_csv(read_file(run_dir + "/profiles.csv"));
    Stream stream(seed, 0, "analyze-project");
    const Trajectory traj =
        project_trajectory(profiles, TrajectoryOptions{}, stream);
    return trajectory_csv(traj);
}

std::vector<std::vector<double>> parse_profiles_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "step,topic,mean")
        throw RuntimeError("profiles csv: missing step,topic,mean header");
    std::vector<std::vector<double>> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string step_s, topic_s, mean_s;
        if (!std::getline(row, step_s, ',') || !std::getline(row, topic_s, ',') ||
            !std::getline(row, mean_s))
            throw RuntimeError("profiles csv line " + std::to_string(line_no) +
                               ": expected step,topic,mean");
        char* end = nullptr;
        const long step = std::strtol(step_s.c_str(), &end, 10);
        if (end != step_s.c_str() + step_s.size() || step < 0)
            throw RuntimeError("profiles csv line " + std::to_string(line_no) +
                               ": bad step '" + step_s + "'");
        const long topic = std::strtol(topic_s.c_str(), &end, 10);
        if (end != topic_s.c_str() + topic_s.size() || topic < 1)
            throw RuntimeError("profiles csv line " + std::to_string(line_no) +
                               ": bad topic '" + topic_s + "'");
        const double mean = std::strtod(mean_s.c_str(), &end);
        if (end != mean_s.c_str() + mean_s.size())
            throw RuntimeError("profiles csv line " + std::to_string(line_no) +
                               ": bad mean '" + mean_s + "'");
        if (step == static_cast<long>(out.size())) out.emplace_back();
        if (step + 1 != static_cast<long>(out.size()) ||
            topic != static_cast<long>(out.back().size()) + 1)
            throw RuntimeError("profiles csv line " + std::to_string(line_no) +
                               ": rows out of order");
        out.back().push_back(mean);
    }
    return out;
}

std::map<std::string, ScalarStat> parse_scalars_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "metric,mean,std,n")
        throw RuntimeError("scalars csv: missing metric,mean,std,n header");
    std::map<std::string, ScalarStat> out;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string name, mean_s, std_s, n_s;
        if (!std::getline(row, name, ',') || !std::getline(row, mean_s, ',') ||
            !std::getline(row, std_s, ',') || !std::getline(row, n_s))
            throw RuntimeError("scalars csv line " + std::to_string(line_no) +
                               ": expected metric,mean,std,n");
        char* end = nullptr;
        ScalarStat st;
        st.mean = std::strtod(mean_s.c_str(), &end);
        if (end != mean_s.c_str() + mean_s.size())
            throw RuntimeError("scalars csv line " + std::to_string(line_no) +
                               ": bad mean '" + mean_s + "'");
        st.stdev = std::strtod(std_s.c_str(), &end);
        if (end != std_s.c_str() + std_s.size())
            throw RuntimeError("scalars csv line " + std::to_string(line_no) +
                               ": bad std '" + std_s + "'");
        st.n = static_cast<int>(std::strtol(n_s.c_str(), &end, 10));
        if (end != n_s.c_str() + n_s.size() || st.n < 1)
            throw RuntimeError("scalars csv line " + std::to_string(line_no) +
                               ": bad replica count '" + n_s + "'");
        out[name] = st;
    }
    return out;
}

LoadedMetrics parse_metrics_csv(const std::string& text)
{
    LoadedMetrics out;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "step,metric,mean,std,n")
        throw RuntimeError("metrics csv: missing step,metric,mean,std,n header");
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string step_s, name, mean_s, std_s, n_s;
        if (!std::getline(row, step_s, ',') || !std::getline(row, name, ',') ||
            !std::getline(row, mean_s, ',') || !std::getline(row, std_s, ',') ||
            !std::getline(row, n_s))
            throw RuntimeError("metrics csv line " + std::to_string(line_no) +
                               ": expected step,metric,mean,std,n");
        char* end = nullptr;
        const long step = std::strtol(step_s.c_str(), &end, 10);
        if (end != step_s.c_str() + step_s.size() || step < 0)
            throw RuntimeError("metrics csv line " + std::to_string(line_no) +
                               ": bad step '" + step_s + "'");
        EnsembleStat& st = out.stats[name];
        if (st.mean.empty()) out.names.push_back(name);
        if (static_cast<long>(st.mean.size()) != step)
            throw RuntimeError("metrics csv line " + std::to_string(line_no) +
                               ": steps of '" + name + "' are not consecutive");
        const double mean = std::strtod(mean_s.c_str(), &end);
        if (end != mean_s.c_str() + mean_s.size())
            throw RuntimeError("metrics csv line " + std::to_string(line_no) +
                               ": bad mean '" + mean_s + "'");
        const double stdev = std::strtod(std_s.c_str(), &end);
        if (end != std_s.c_str() + std_s.size())
            throw RuntimeError("metrics csv line " + std::to_string(line_no) +
                               ": bad std '" + std_s + "'");
        const long n = std::strtol(n_s.c_str(), &end, 10);
        if (end != n_s.c_str() + n_s.size() || n < 1)
            throw RuntimeError("metrics csv line " + std::to_string(line_no) +
                               ": bad replica count '" + n_s + "'");
        st.mean.push_back(mean);
        st.stdev.push_back(stdev);
        st.n = static_cast<int>(n);
        out.horizon = std::max(out.horizon, static_cast<int>(step) + 1);
    }
    return out;
}

} // namespace csn
