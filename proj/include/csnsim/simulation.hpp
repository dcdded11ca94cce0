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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csnsim/comments.hpp"
#include "csnsim/filter.hpp"
#include "csnsim/influence.hpp"
#include "csnsim/metrics.hpp"
#include "csnsim/semantic_network.hpp"
#include "csnsim/update.hpp"

namespace csn {

/// Every model constant in one place. Defaults reproduce the published
/// configuration: 250 topics, 1000 candidate events per step filtered down to
/// 250 news items, three tiers per item.
struct ModelParams {
    int n_topics = 250;
    int n_events = 1000;
    int n_tiers = 3;
    int horizon = 500;
    double lambda_f = 0.2;  // editorial blend toward the community view
    double lambda_m = 0.9;  // community frequency inertia
    double lambda_e = 0.5;  // event-pool temporal mixing
    InitParams init{.alpha_c = 1.0,
                    .weight_a = -0.65,
                    .weight_b = 1.0,
                    .weight_s = 0.12,
                    .sigma_fp = 1.0,
                    .sigma_wp = 0.05};
    FilterParams filter;
    CommentParams comments;
    UpdateParams update;
};

/// A full scenario: the model, the influence schedule, and which topic/tier
/// the tracked metrics single out (indices are 0-based here).
struct ScenarioParams {
    ModelParams model;
    std::vector<InfluenceEntry> schedule;
    int target_topic = 24;
    int target_tier = 1;
    double quantile = 0.2;  // similarity top/bottom quantile
};

struct RunOptions {
    int snapshot_every = 25;      // 0 disables periodic snapshots
    bool want_snapshots = false;  // community network copies at the cadence
    bool track_profiles = false;  // per-step comment topic profiles
    bool track_tier_ranks = false;  // published-title counts by tier and rank
};

/// Canonical order of the per-step metric series.
const std::vector<std::string>& metric_names();
int metric_index(const std::string& name);

/// Full parameter validation (run_simulation also calls this); violations are
/// ConfigError.
void validate_scenario(const ScenarioParams& sp);

/// One replica's per-step records.
struct RunRecords {
    std::vector<std::vector<double>> series;               // [metric][step]
    std::map<std::string, double> scalars;                 // whole-run summaries
    std::vector<std::pair<int, SemanticNetwork>> snapshots;  // (t, community)
    std::vector<std::vector<double>> profiles;             // [step][topic]
    /// Published-title counts accumulated over all steps, indexed
    /// [tier][rank-1] with ranks taken from the editors' blended view at
    /// publication time. Filled only with track_tier_ranks.
    std::vector<std::vector<double>> tier_rank_counts;
};

/// Runs one replica: per step, resolve the schedule, evolve the event pool,
/// generate and filter events, generate comments, record metrics, then update
/// the community network. The general network never changes except through
/// external shocks, which are applied as a per-step view. Errors from inside
/// the loop carry the step index.
RunRecords run_simulation(const ScenarioParams& sp, std::uint64_t master_seed,
                          std::uint64_t replica, const RunOptions& opts);

/// mean/std/n triple for scalar summaries.
struct ScalarStat {
    double mean = 0.0;
    double stdev = 0.0;
    int n = 0;
};

struct EnsembleResult {
    int horizon = 0;
    int n_replicas = 0;
    std::vector<EnsembleStat> metric_stats;          // aligned with metric_names()
    std::map<std::string, ScalarStat> scalar_stats;
    std::vector<std::vector<double>> mean_profiles;  // [step][topic]
    RunRecords first_replica;                        // snapshots of replica 0
};

/// Independent replicas keyed by (master_seed, replica index). Replicas may
/// execute on any number of threads; the reduction always folds them in
/// replica order, so results are bit-identical for every parallelism degree.
EnsembleResult run_ensemble(const ScenarioParams& sp, int n_replicas,
                            std::uint64_t master_seed, int jobs,
                            const RunOptions& opts);

} // namespace csn
