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
#include "csnsim/events.hpp"

#include <algorithm>
#include <cmath>

#include "csnsim/errors.hpp"

namespace csn {

Cdf::Cdf(std::span<const double> p) : cum(p.size())
{
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        cum[i] = acc;
    }
    if (!(acc > 0.0))
        throw RuntimeError("distribution has zero total mass");
    // Normalize in place so draws can binary-search on [0,1).
    for (double& c : cum)
        c /= acc;
    cum.back() = 1.0;
}

int Cdf::draw(Stream& s) const
{
    double u = uniform01(s);
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    return static_cast<int>(it - cum.begin());
}

std::vector<double> base_event_distribution(const RankTable& general_ranks)
{
    const int n = general_ranks.n();
    std::vector<double> p(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        p[i] = -std::log(general_ranks.r[i]);   // 0 for the rank-N topic
        sum += p[i];
    }
    for (double& v : p)
        v /= sum;
    return p;
}

std::vector<double> evolve_event_distribution(std::span<const double> previous,
                                              const RankTable& general_ranks,
                                              double lambda_e, int n_draws,
                                              Stream& s)
{
    const int n = general_ranks.n();
    if (static_cast<int>(previous.size()) != n)
        throw RuntimeError("event distribution size mismatch");
    std::vector<double> base = base_event_distribution(general_ranks);
    Cdf cdf(base);
    std::vector<double> hist(n, 0.0);
    for (int d = 0; d < n_draws; ++d)
        hist[cdf.draw(s)] += 1.0;
    std::vector<double> out(n);
    const double inv = 1.0 / static_cast<double>(n_draws);
    for (int i = 0; i < n; ++i)
        out[i] = (1.0 - lambda_e) * hist[i] * inv + lambda_e * previous[i];
    return out;
}

EventBatch generate_events(std::span<const double> distribution, int n_events,
                           int n_tiers, Stream& s)
{
    const int n = static_cast<int>(distribution.size());
    int support = 0;
    for (double p : distribution)
        support += (p > 0.0);
    if (support < n_tiers)
        throw RuntimeError("event distribution support smaller than tier count");

    Cdf cdf(distribution);
    EventBatch batch;
    batch.n_tiers = n_tiers;
    batch.topics.resize(static_cast<std::size_t>(n_events) * n_tiers);

    constexpr int kMaxRejects = 64;
    std::vector<double> rescaled(n);
    for (int e = 0; e < n_events; ++e) {
        std::int32_t* row = &batch.topic(e, 0);
        for (int q = 0; q < n_tiers; ++q) {
            int pick = -1;
            for (int tries = 0; tries < kMaxRejects; ++tries) {
                int cand = cdf.draw(s);
                bool dup = false;
                for (int p = 0; p < q; ++p)
                    dup |= (row[p] == cand);
                if (!dup) {
                    pick = cand;
                    break;
                }
            }
            if (pick < 0) {
                // Pathologically concentrated distribution: draw once from
                // the explicitly renormalized distribution minus used topics.
                std::copy(distribution.begin(), distribution.end(), rescaled.begin());
                for (int p = 0; p < q; ++p)
                    rescaled[row[p]] = 0.0;
                pick = Cdf(rescaled).draw(s);
            }
            row[q] = pick;
        }
    }
    return batch;
}

} // namespace csn
