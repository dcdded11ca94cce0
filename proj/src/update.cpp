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
#include "csnsim/update.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "csnsim/errors.hpp"

namespace csn {

void update_frequencies(SemanticNetwork& community,
                        std::span<const double> comment_mass, double lambda_m,
                        std::span<const double> support)
{
    const int n = community.n_topics;
    double total = 0.0;
    for (double m : comment_mass) total += m;
    if (total <= 0.0)
        throw RuntimeError("frequency update requires positive total comment mass");

    RankTable prev = normalized_ranks(community.frequency);
    std::vector<int> tie_key(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        tie_key[static_cast<std::size_t>(i)] = prev.rank_of(i);

    std::vector<double> proxy(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        proxy[static_cast<std::size_t>(i)] =
            lambda_m * community.frequency[static_cast<std::size_t>(i)] +
            (1.0 - lambda_m) * comment_mass[static_cast<std::size_t>(i)] / total;
    }
    rank_quantize(proxy, support, tie_key);
    community.frequency = std::move(proxy);
}

void update_weights(SemanticNetwork& community, const CommentNetwork& comments,
                    const UpdateParams& p, Stream& s, UpdateScratch& scratch)
{
    const int n = community.n_topics;
    const std::size_t n_pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const double d = comments.pair_total;
    const bool noisy = p.sigma_wn > 0.0;

    if (noisy) scratch.eps.assign(n_pairs, 0.0);

    auto hebb = [&](int i, int j) {
        if (d <= 0.0) return 0.0;
        double m = comments.pm(i, j);
        if (m <= 0.0) return 0.0;
        double w = community.w(i, j);
        return p.eta * (p.w_max - std::abs(w)) * m / d;
    };

    double sum_gain = 0.0;
    double sum_w = 0.0;
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++idx) {
            if (noisy) {
                double e = p.sigma_wn * normal01(s);
                scratch.eps[idx] = e;
                sum_gain += e;
            }
            sum_gain += hebb(i, j);
            sum_w += community.w(i, j);
        }
    }
    double gamma = sum_w > 0.0 ? sum_gain / sum_w : 0.0;

    idx = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++idx) {
            double w = community.w(i, j);
            double e = noisy ? scratch.eps[idx] : 0.0;
            double base = p.literal_hebbian ? 0.0 : w;
            double next = base + hebb(i, j) - gamma * w + e;
            community.set_w(i, j, std::clamp(next, 0.0, p.w_max));
        }
    }
}

} // namespace csn
