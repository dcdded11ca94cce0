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

#include <span>
#include <utility>
#include <vector>

#include "csnsim/comments.hpp"
#include "csnsim/semantic_network.hpp"

namespace csn {

/// Normalized Kendall tau distance between two rankings of the same topics:
/// discordant pair count over N(N-1)/2, in [0, 1].
double kendall_tau_distance(const RankTable& a, const RankTable& b);

/// The step's comment masses normalized to a probability profile over topics.
std::vector<double> comment_topic_profile(const CommentNetwork& comments);

/// Per-step ensemble summary of one metric.
struct EnsembleStat {
    std::vector<double> mean;
    std::vector<double> stdev;  // population std across replicas
    int n = 0;                  // replica count
};

struct RatioSeries {
    std::vector<double> ratio;
    std::vector<double> band;  // one population std, delta-method propagation
};

/// Per-step ratio of ensemble means, influenced over baseline, with the
/// spread of the ratio propagated from both ensembles' spreads. Fails on a
/// zero baseline mean.
RatioSeries ensemble_ratio(const EnsembleStat& influenced, const EnsembleStat& baseline);

/// Non-target topics most / least similar to the target at t=0. Each set has
/// max(1, floor(N*q)) topics (capped at N-1); ties break toward lower index.
struct QuantileSets {
    std::vector<int> top;
    std::vector<int> bottom;
};
QuantileSets similarity_quantile_sets(std::span<const double> initial_target_row,
                                      int target, double quantile);

/// Mean over each set of (w_target,j - baseline w_target,j).
std::pair<double, double> similarity_quantile_diff(std::span<const double> target_row,
                                                   std::span<const double> baseline_row,
                                                   const QuantileSets& sets);

/// Exact minimizer of (1/n)*sum (x_k - y_k)^2 + lam * sum |y_{k+1} - y_k|.
std::vector<double> tv_denoise(std::span<const double> x, double lam);

/// Each block of `window` consecutive points replaced by the block mean (the
/// trailing partial block by its own mean). Same length as the input.
std::vector<double> block_average(std::span<const double> x, int window);

} // namespace csn
