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
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csnsim/config.hpp"
#include "csnsim/embed.hpp"
#include "csnsim/metrics.hpp"
#include "csnsim/simulation.hpp"

namespace csn {

/// The complete output tree of an ensemble as (relative path, exact bytes)
/// pairs, in write order with manifest.txt last:
///   config.ini    resolved configuration, canonical form
///   metrics.csv   step,metric,mean,std,n  (step-major, catalogue order)
///   scalars.csv   metric,mean,std,n
///   profiles.csv  step,topic,mean         (only when profiles were tracked)
///   snapshots/frequencies_XXXXX.csv, snapshots/weights_XXXXX.csv
///                 replica-0 state at the snapshot cadence
///   manifest.txt  scenario, version, seed, parameters, and an FNV-1a64
///                 digest of every other file
/// All numbers carry 17 significant digits, so re-reading is bit-exact.
/// Identical inputs always produce identical bytes (no timestamps).
std::vector<std::pair<std::string, std::string>> export_files(
    const EnsembleResult& ens, const ScenarioConfig& cfg);

/// Writes the export_files tree under out_dir, creating directories as
/// needed. Existing files are overwritten. Throws RuntimeError on I/O errors.
void export_results(const EnsembleResult& ens, const ScenarioConfig& cfg,
                    const std::string& out_dir);

/// step,x,y,smoothed_x,smoothed_y with 17 significant digits.
std::string trajectory_csv(const Trajectory& traj);

/// Series read back from a metrics.csv produced by export_files.
struct LoadedMetrics {
    std::vector<std::string> names;  // first-appearance order
    std::map<std::string, EnsembleStat> stats;
    int horizon = 0;
};

/// Inverse of the metrics.csv writer; bit-exact for files it produced.
/// Throws RuntimeError on malformed content.
LoadedMetrics parse_metrics_csv(const std::string& text);

/// Inverse of the scalars.csv writer.
std::map<std::string, ScalarStat> parse_scalars_csv(const std::string& text);

/// Manifest digest of exact file bytes, rendered as 16 hex digits.
std::string content_digest(const std::string& bytes);

/// Runs the ensemble described by the config, honoring its replica count,
/// master seed, worker count, and snapshot cadence. Comment profiles are
/// always tracked so exported runs support trajectory analysis.
EnsembleResult run_configured(const ScenarioConfig& cfg);

/// run_configured followed by export_results.
void run_and_export(const ScenarioConfig& cfg, const std::string& out_dir);

/// Runs the config once per point of the [sweep] grid (lambda_f x lambda_m x
/// influence strength; empty axes keep the base value) and exports each run
/// into a named subdirectory of out_root. Returns the subdirectory names in
/// run order.
std::vector<std::string> sweep_and_export(const ScenarioConfig& cfg,
                                          const std::string& out_root);

/// step,ratio,band: influenced over baseline ensemble means of one metric,
/// read from two exported run directories.
std::string ratio_csv_from_dirs(const std::string& run_dir,
                                const std::string& baseline_dir,
                                const std::string& metric);

/// step,top_mean,bottom_mean,diff,band of the similarity-quantile weight
/// gains recorded in an exported run.
std::string quantile_diff_csv_from_dir(const std::string& run_dir);

/// step,raw,denoised: total-variation denoised ensemble mean of one metric.
std::string denoise_csv_from_dir(const std::string& run_dir,
                                 const std::string& metric, double lam);

/// Planar embedding of the exported mean comment profiles (profiles.csv).
std::string trajectory_csv_from_dir(const std::string& run_dir,
                                    std::uint64_t seed);

/// Inverse of the profiles.csv writer: [step][topic] means.
std::vector<std::vector<double>> parse_profiles_csv(const std::string& text);

} // namespace csn
