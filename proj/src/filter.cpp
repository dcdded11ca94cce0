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
#include "csnsim/filter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "csnsim/errors.hpp"

namespace csn {

BlendedView blended_view(const SemanticNetwork& community,
                         std::span<const double> general_frequency,
                         const SemanticNetwork& general, double lambda_f)
{
    const int n = community.n_topics;
    BlendedView v;
    v.n_topics = n;
    v.frequency.resize(n);
    for (int i = 0; i < n; ++i)
        v.frequency[i] = lambda_f * community.frequency[i]
                         + (1.0 - lambda_f) * general_frequency[i];
    v.weight.resize(static_cast<std::size_t>(n) * n);
    for (std::size_t i = 0; i < v.weight.size(); ++i)
        v.weight[i] = lambda_f * community.weight[i]
                      + (1.0 - lambda_f) * general.weight[i];
    v.ranks = normalized_ranks(v.frequency);
    return v;
}

EventBatch stage1_select(const EventBatch& events, const BlendedView& view,
                         const FilterParams& p, Stream& s)
{
    const int n_events = events.size();
    const int n_tiers = events.n_tiers;
    if (static_cast<int>(p.alpha.size()) < n_tiers)
        throw ConfigError("filter needs one exponent per tier");
    const int keep = static_cast<int>(std::floor(p.r1 * n_events));

    // Per-topic weight tables per tier: rank^(-alpha_q/r2). The r2 correction
    // compensates the flattening of the effectively random second stage.
    const int n = view.ranks.n();
    std::vector<double> table(static_cast<std::size_t>(n_tiers) * n);
    for (int q = 0; q < n_tiers; ++q) {
        double expo = -p.alpha[q] / p.r2;
        for (int i = 0; i < n; ++i)
            table[static_cast<std::size_t>(q) * n + i] = std::pow(view.ranks.r[i], expo);
    }

    std::vector<double> w(n_events);
    for (int e = 0; e < n_events; ++e) {
        double prod = 1.0;
        for (int q = 0; q < n_tiers; ++q)
            prod *= table[static_cast<std::size_t>(q) * n + events.topic(e, q)];
        w[e] = prod;
    }

    auto picked = weighted_sample_without_replacement(s, w, keep);
    EventBatch out;
    out.n_tiers = n_tiers;
    out.topics.reserve(static_cast<std::size_t>(keep) * n_tiers);
    for (int idx : picked)
        for (int q = 0; q < n_tiers; ++q)
            out.topics.push_back(events.topic(idx, q));
    return out;
}

EventBatch stage2_select(const EventBatch& events, const BlendedView& view,
                         const FilterParams& p)
{
    const int n_events = events.size();
    const int n_tiers = events.n_tiers;
    const int keep = static_cast<int>(std::floor(p.r2 * n_events));

    std::vector<double> score(n_events);
    for (int e = 0; e < n_events; ++e) {
        double prod = 1.0;
        for (int a = 0; a < n_tiers; ++a)
            for (int b = a + 1; b < n_tiers; ++b)
                prod *= std::max(view.w(events.topic(e, a), events.topic(e, b)), 0.0);
        score[e] = prod;
    }

    std::vector<int> order(n_events);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return score[a] > score[b]; });
    order.resize(keep);
    std::sort(order.begin(), order.end());   // survivors keep input order

    EventBatch out;
    out.n_tiers = n_tiers;
    out.topics.reserve(static_cast<std::size_t>(keep) * n_tiers);
    for (int idx : order)
        for (int q = 0; q < n_tiers; ++q)
            out.topics.push_back(events.topic(idx, q));
    return out;
}

EventBatch filter_events(const EventBatch& events, const BlendedView& view,
                         const FilterParams& p, Stream& s)
{
    return stage2_select(stage1_select(events, view, p, s), view, p);
}

} // namespace csn
