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

#include "csnsim/events.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

namespace csn {

struct CommentParams {
    double mass_a = 5.7e-6;    // shifted log-normal comment-mass distribution
    double mass_b = 1.0e-4;
    double mass_s = 1.5;
    std::vector<double> zero_ratio{0.7, 0.9, 0.9};  // slope of the per-tier
                                                    // zero-multiplier odds in r
    std::vector<double> rate_a{0.005, 0.01, 0.02};  // multiplier decay rates
    double rate_b = 0.8;
    double c_com = 1.0e-6;     // lower-bound scale of the multiplier support
};

/// Comment-side interventions. Neutral values (1.0 / no target) leave the
/// generation path byte-identical to an uninfluenced run.
struct CommentInfluence {
    double s_tr = 1.0;         // troll boost on the target topic's entry
    int troll_target = -1;
    double s_cs = 1.0;         // counterspeech boost on all on-topic entries
};

/// Precomputed n*H(n) table (H the harmonic number), the per-rank upper bound
/// of the comment multiplier support.
class Harmonics {
public:
    explicit Harmonics(int n_max);
    double hbar(int n) const { return hbar_[n - 1]; }

private:
    std::vector<double> hbar_;
};

/// Aggregated comment activity of one step.
struct CommentNetwork {
    int n_topics = 0;
    std::vector<double> topic_mass;                 // unnormalized
    std::vector<double> pair_mass;                  // dense symmetric
    std::vector<std::pair<int, int>> active_pairs;  // unique i<j with mass
    double total_mass = 0;     // sum of topic_mass
    double assigned_mass = 0;  // sum of the drawn per-news masses c_i
    double pair_total = 0;     // sum of pair_mass over i<j
    double excess_mass = 0;    // sum of c*(requested-1) over overflowing news
    int overflow_count = 0;    // news whose on-topic request exceeded c
    int news_count = 0;

    double pm(int i, int j) const
    {
        return pair_mass[static_cast<std::size_t>(i) * n_topics + j];
    }
};

/// Relative comment volume for one news item; strictly positive.
double sample_comment_mass(Stream& s, const CommentParams& p);

/// One tier's comment multiplier: zero with probability min(zero_ratio*r, 1),
/// otherwise a truncated exponential on [min(c_com*hbar/c, hbar), hbar] with
/// rate rate_a*exp(-rate_b*r). r is the topic's community rank (n_rank/N).
double sample_tier_multiplier(Stream& s, const CommentParams& p, int tier,
                              double r, int n_rank, double c, const Harmonics& h);

/// Reference expansion of one news item's comment masses over all topics,
/// including the troll boost and its exact-sum rescale. Used by tests and by
/// small-scale analysis; the step loop uses the aggregated fast path.
std::vector<double> news_comment_frequencies(std::span<const std::int32_t> topics,
                                             std::span<const double> community_freq,
                                             std::span<const double> multipliers,
                                             double c, double s_tr, int troll_target);

/// Full comment generation for one step's news batch.
CommentNetwork generate_comments(const EventBatch& news,
                                 const SemanticNetwork& community,
                                 const RankTable& community_ranks,
                                 const CommentParams& p,
                                 const CommentInfluence& infl,
                                 const Harmonics& h, Stream& s);

} // namespace csn
