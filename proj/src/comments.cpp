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
#include "csnsim/comments.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "csnsim/errors.hpp"

namespace csn {

Harmonics::Harmonics(int n_max)
{
    if (n_max < 1) throw RuntimeError("Harmonics: table size must be positive");
    hbar_.resize(static_cast<std::size_t>(n_max));
    double h = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        h += 1.0 / n;
        hbar_[static_cast<std::size_t>(n - 1)] = n * h;
    }
}

double sample_comment_mass(Stream& s, const CommentParams& p)
{
    for (int tries = 0; tries < 100000; ++tries) {
        double c = shifted_lognormal(s, p.mass_a, p.mass_b, p.mass_s);
        if (c > 0.0) return c;
    }
    throw RuntimeError("comment mass sampling failed to draw a positive value");
}

double sample_tier_multiplier(Stream& s, const CommentParams& p, int tier,
                              double r, int n_rank, double c, const Harmonics& h)
{
    double p_zero = std::min(p.zero_ratio[static_cast<std::size_t>(tier)] * r, 1.0);
    if (uniform01(s) < p_zero) return 0.0;
    double hi = h.hbar(n_rank);
    double lo = std::min(p.c_com * hi / c, hi);
    double rate = p.rate_a[static_cast<std::size_t>(tier)] * std::exp(-p.rate_b * r);
    return truncated_exponential(s, rate, lo, hi);
}

namespace {

/// Off-topic normalization constant: what is left of the news item's mass
/// after the on-topic entries take theirs, spread over the off-topic
/// frequency mass. Zero when the on-topic request already exceeds the budget.
double off_topic_constant(double sum_mf, double sum_f)
{
    double denom = 1.0 - sum_f;
    if (denom <= 0.0)
        throw RuntimeError("news topics carry the entire frequency mass; "
                           "off-topic normalization is undefined");
    return (1.0 - std::min(sum_mf, 1.0)) / denom;
}

} // namespace

std::vector<double> news_comment_frequencies(std::span<const std::int32_t> topics,
                                             std::span<const double> community_freq,
                                             std::span<const double> multipliers,
                                             double c, double s_tr, int troll_target)
{
    const std::size_t n = community_freq.size();
    double sum_mf = 0.0;
    double sum_f = 0.0;
    for (std::size_t q = 0; q < topics.size(); ++q) {
        double f = community_freq[static_cast<std::size_t>(topics[q])];
        sum_mf += multipliers[q] * f;
        sum_f += f;
    }
    double C = off_topic_constant(sum_mf, sum_f);

    std::vector<double> mass(n);
    for (std::size_t j = 0; j < n; ++j) mass[j] = c * C * community_freq[j];
    for (std::size_t q = 0; q < topics.size(); ++q) {
        auto z = static_cast<std::size_t>(topics[q]);
        mass[z] = c * multipliers[q] * community_freq[z];
    }

    if (s_tr != 1.0 && troll_target >= 0) {
        mass[static_cast<std::size_t>(troll_target)] *= s_tr;
        double total = 0.0;
        for (double m : mass) total += m;
        if (total > 0.0) {
            double scale = c / total;
            for (double& m : mass) m *= scale;
        }
    }
    return mass;
}

CommentNetwork generate_comments(const EventBatch& news,
                                 const SemanticNetwork& community,
                                 const RankTable& community_ranks,
                                 const CommentParams& p,
                                 const CommentInfluence& infl,
                                 const Harmonics& h, Stream& s)
{
    const int n = community.n_topics;
    const int n_tiers = news.n_tiers;
    const bool troll = infl.s_tr != 1.0 && infl.troll_target >= 0;

    CommentNetwork net;
    net.n_topics = n;
    net.topic_mass.assign(static_cast<std::size_t>(n), 0.0);
    net.pair_mass.assign(static_cast<std::size_t>(n) * n, 0.0);
    net.news_count = news.size();

    double bulk = 0.0;  // coefficient of the shared off-topic contribution
    std::vector<double> mult(static_cast<std::size_t>(n_tiers));
    for (int i = 0; i < news.size(); ++i) {
        double c = sample_comment_mass(s, p);
        net.assigned_mass += c;

        double sum_mf = 0.0;
        double sum_f = 0.0;
        for (int q = 0; q < n_tiers; ++q) {
            int z = news.topic(i, q);
            double r = community_ranks.r[static_cast<std::size_t>(z)];
            double m = sample_tier_multiplier(s, p, q, r,
                                              community_ranks.rank_of(z), c, h);
            m *= infl.s_cs;
            mult[static_cast<std::size_t>(q)] = m;
            double f = community.frequency[static_cast<std::size_t>(z)];
            sum_mf += m * f;
            sum_f += f;
        }
        bool overflow = sum_mf >= 1.0;
        if (overflow) {
            ++net.overflow_count;
            net.excess_mass += c * (sum_mf - 1.0);
        }
        double C = off_topic_constant(sum_mf, sum_f);

        double scale = 1.0;
        if (troll) {
            double f_t = community.frequency[static_cast<std::size_t>(infl.troll_target)];
            double e_t = C * f_t;  // target's base entry, in units of c
            for (int q = 0; q < n_tiers; ++q)
                if (news.topic(i, q) == infl.troll_target)
                    e_t = mult[static_cast<std::size_t>(q)] * f_t;
            double base_total = overflow ? sum_mf : 1.0;
            scale = 1.0 / (base_total + (infl.s_tr - 1.0) * e_t);
        }

        bulk += scale * c * C;
        for (int q = 0; q < n_tiers; ++q) {
            int z = news.topic(i, q);
            double m = mult[static_cast<std::size_t>(q)];
            if (troll && z == infl.troll_target) m *= infl.s_tr;
            net.topic_mass[static_cast<std::size_t>(z)] +=
                scale * c * community.frequency[static_cast<std::size_t>(z)] * (m - C);
        }
        if (troll) {
            bool on_topic = false;
            for (int q = 0; q < n_tiers; ++q)
                if (news.topic(i, q) == infl.troll_target) on_topic = true;
            if (!on_topic)
                net.topic_mass[static_cast<std::size_t>(infl.troll_target)] +=
                    scale * (infl.s_tr - 1.0) * c * C *
                    community.frequency[static_cast<std::size_t>(infl.troll_target)];
        }

        for (int a = 0; a < n_tiers; ++a) {
            for (int b = a + 1; b < n_tiers; ++b) {
                int za = news.topic(i, a);
                int zb = news.topic(i, b);
                int lo = std::min(za, zb);
                int hi = std::max(za, zb);
                std::size_t idx = static_cast<std::size_t>(lo) * n + hi;
                if (net.pair_mass[idx] == 0.0) net.active_pairs.emplace_back(lo, hi);
                net.pair_mass[idx] += c;
                net.pair_mass[static_cast<std::size_t>(hi) * n + lo] += c;
                net.pair_total += c;
            }
        }
    }

    for (int j = 0; j < n; ++j)
        net.topic_mass[static_cast<std::size_t>(j)] +=
            community.frequency[static_cast<std::size_t>(j)] * bulk;
    for (double m : net.topic_mass) net.total_mass += m;
    return net;
}

} // namespace csn
