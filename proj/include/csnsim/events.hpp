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

#include <cstdint>
#include <span>
#include <vector>

#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

namespace csn {

/// A batch of events (or news items): each row holds n_tiers distinct topic
/// ids, tier 1 first. Stored flat for cache friendliness.
struct EventBatch {
    int n_tiers = 0;
    std::vector<std::int32_t> topics;

    int size() const
    {
        return n_tiers == 0 ? 0 : static_cast<int>(topics.size()) / n_tiers;
    }
    std::int32_t topic(int event, int tier) const
    {
        return topics[static_cast<std::size_t>(event) * n_tiers + tier];
    }
    std::int32_t& topic(int event, int tier)
    {
        return topics[static_cast<std::size_t>(event) * n_tiers + tier];
    }
};

/// Event topic distribution p_i proportional to -ln(r_i) over the general
/// ranks; the rank-N topic gets probability exactly 0.
std::vector<double> base_event_distribution(const RankTable& general_ranks);

/// One temporal-mixing step: an empirical histogram of n_draws fresh draws
/// from the base distribution, blended with the previous step's distribution
/// as (1-lambda_e)*hist + lambda_e*previous.
std::vector<double> evolve_event_distribution(std::span<const double> previous,
                                              const RankTable& general_ranks,
                                              double lambda_e, int n_draws,
                                              Stream& s);

/// Draw n_events events of n_tiers distinct topics each from the given
/// distribution. Tiers are sampled sequentially, excluding topics already
/// used by earlier tiers of the same event.
EventBatch generate_events(std::span<const double> distribution, int n_events,
                           int n_tiers, Stream& s);

/// Cumulative-sum lookup table for repeated draws from a fixed distribution.
struct Cdf {
    std::vector<double> cum;
    explicit Cdf(std::span<const double> p);
    int draw(Stream& s) const;
};

} // namespace csn
