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
#include "csnsim/influence.hpp"

#include <algorithm>
#include <cstddef>
#include <string>

#include "csnsim/errors.hpp"

namespace csn {

const char* influence_kind_name(InfluenceKind kind)
{
    switch (kind) {
    case InfluenceKind::alignment: return "alignment";
    case InfluenceKind::amplification: return "amplification";
    case InfluenceKind::reframing: return "reframing";
    case InfluenceKind::turnover: return "turnover";
    case InfluenceKind::troll: return "troll";
    case InfluenceKind::counterspeech: return "counterspeech";
    case InfluenceKind::external_shock: return "external_shock";
    }
    return "unknown";
}

namespace {

bool needs_topic(InfluenceKind k)
{
    return k == InfluenceKind::amplification || k == InfluenceKind::reframing ||
           k == InfluenceKind::troll || k == InfluenceKind::external_shock;
}

} // namespace

void validate_schedule(std::span<const InfluenceEntry> schedule, int horizon,
                       int n_topics, int n_tiers)
{
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const InfluenceEntry& e = schedule[i];
        const std::string name = influence_kind_name(e.kind);
        if (e.t_start < 0 || e.t_end > horizon || e.t_start >= e.t_end)
            throw ConfigError(name + " influence window [" +
                              std::to_string(e.t_start) + ", " +
                              std::to_string(e.t_end) +
                              ") must be non-empty and inside [0, " +
                              std::to_string(horizon) + ")");
        if (e.strength <= 0.0)
            throw ConfigError(name + " influence strength must be positive");
        if ((e.kind == InfluenceKind::turnover ||
             e.kind == InfluenceKind::reframing) &&
            e.strength > 1.0)
            throw ConfigError(name + " influence strength must not exceed 1");
        if (needs_topic(e.kind)) {
            if (e.target_topic < 0 || e.target_topic >= n_topics)
                throw ConfigError(name + " influence requires a target topic in 1.." +
                                  std::to_string(n_topics));
        }
        if (e.kind == InfluenceKind::reframing &&
            (e.target_tier < 0 || e.target_tier >= n_tiers))
            throw ConfigError("reframing influence requires a target tier in 1.." +
                              std::to_string(n_tiers));
        for (std::size_t j = 0; j < i; ++j) {
            const InfluenceEntry& o = schedule[j];
            if (o.kind == e.kind && e.t_start < o.t_end && o.t_start < e.t_end)
                throw ConfigError("overlapping " + name + " influence windows");
        }
    }
}

StepParams resolve_schedule(std::span<const InfluenceEntry> schedule,
                            double base_lambda_f, double base_lambda_m, int t)
{
    StepParams p;
    p.lambda_f = base_lambda_f;
    p.lambda_m = base_lambda_m;
    for (const InfluenceEntry& e : schedule) {
        if (t < e.t_start || t >= e.t_end) continue;
        switch (e.kind) {
        case InfluenceKind::alignment: p.lambda_f = e.strength; break;
        case InfluenceKind::turnover: p.lambda_m = e.strength; break;
        case InfluenceKind::amplification:
            p.s_amp = e.strength;
            p.amp_target = e.target_topic;
            break;
        case InfluenceKind::reframing:
            p.p_ref = e.strength;
            p.reframe_topic = e.target_topic;
            p.reframe_tier = e.target_tier;
            break;
        case InfluenceKind::troll:
            p.s_tr = e.strength;
            p.troll_target = e.target_topic;
            break;
        case InfluenceKind::counterspeech: p.s_cs = e.strength; break;
        case InfluenceKind::external_shock:
            p.shock_boost = e.strength;
            p.shock_target = e.target_topic;
            break;
        }
    }
    return p;
}

std::vector<double> amplified_frequencies(std::span<const double> general_freq,
                                          double s_amp, int target)
{
    std::vector<double> out(general_freq.begin(), general_freq.end());
    if (s_amp == 1.0 || target < 0) return out;
    out[static_cast<std::size_t>(target)] *= s_amp;
    double sum = 0.0;
    for (double f : out) sum += f;
    for (double& f : out) f /= sum;
    return out;
}

void apply_reframing(EventBatch& news, double p_ref, int target_topic,
                     int target_tier, Stream& s)
{
    if (p_ref <= 0.0) return;
    for (int i = 0; i < news.size(); ++i) {
        if (uniform01(s) >= p_ref) continue;
        bool present = false;
        for (int q = 0; q < news.n_tiers; ++q)
            if (news.topic(i, q) == target_topic) present = true;
        if (present) continue;
        news.topics[static_cast<std::size_t>(i) * news.n_tiers + target_tier] =
            target_topic;
    }
}

SemanticNetwork shocked_network(const SemanticNetwork& general, double boost,
                                int target, std::span<const double> support)
{
    SemanticNetwork out = general;
    if (boost == 1.0 || target < 0) return out;
    out.frequency[static_cast<std::size_t>(target)] *= boost;
    double sum = 0.0;
    for (double f : out.frequency) sum += f;
    for (double& f : out.frequency) f /= sum;
    rank_quantize(out.frequency, support);
    return out;
}

} // namespace csn
