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
#include <string>
#include <vector>

#include "csnsim/events.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

namespace csn {

enum class InfluenceKind {
    alignment,       // overrides the filter blend strength lambda_f
    amplification,   // inflates the target topic in the editors' general view
    reframing,       // swaps a tier topic of published news for the target
    turnover,        // overrides the memory strength lambda_m
    troll,           // boosts the target topic inside every comment section
    counterspeech,   // boosts all on-topic comment multipliers
    external_shock,  // boosts the target topic in the general network itself
};

const char* influence_kind_name(InfluenceKind kind);

/// One scheduled intervention over the half-open step window [t_start, t_end).
struct InfluenceEntry {
    InfluenceKind kind;
    int t_start = 0;
    int t_end = 0;
    double strength = 1.0;
    int target_topic = -1;  // 0-based; -1 = unset
    int target_tier = -1;   // 0-based; -1 = unset
};

/// Effective model parameters for one step after applying the schedule.
/// Neutral values leave every stage byte-identical to an uninfluenced run.
struct StepParams {
    double lambda_f = 0.0;
    double lambda_m = 0.0;
    double s_amp = 1.0;
    int amp_target = -1;
    double p_ref = 0.0;
    int reframe_topic = -1;
    int reframe_tier = -1;
    double s_tr = 1.0;
    int troll_target = -1;
    double s_cs = 1.0;
    double shock_boost = 1.0;
    int shock_target = -1;
};

/// Rejects malformed schedules: windows outside [0, horizon), empty or
/// inverted windows, non-positive strengths, missing or out-of-range targets,
/// replacement probabilities above 1, and overlapping windows of the same
/// kind. Throws ConfigError.
void validate_schedule(std::span<const InfluenceEntry> schedule, int horizon,
                       int n_topics, int n_tiers);

StepParams resolve_schedule(std::span<const InfluenceEntry> schedule,
                            double base_lambda_f, double base_lambda_m, int t);

/// The editors' perceived general frequencies: target entry scaled by s_amp,
/// then renormalized. The true general network is untouched.
std::vector<double> amplified_frequencies(std::span<const double> general_freq,
                                          double s_amp, int target);

/// Per published news item, with probability p_ref replace the target tier's
/// topic by the target topic; items already containing the target anywhere are
/// left unchanged (the probability draw is still consumed). With p_ref = 0 no
/// draws are consumed.
void apply_reframing(EventBatch& news, double p_ref, int target_topic,
                     int target_tier, Stream& s);

/// General network under an external shock: target frequency multiplied by
/// boost, renormalized, and snapped back onto the frequency support. Weights
/// are copied unchanged. Pure; the caller restores the original afterwards.
SemanticNetwork shocked_network(const SemanticNetwork& general, double boost,
                                int target, std::span<const double> support);

} // namespace csn
