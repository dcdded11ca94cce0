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
#include "csnsim/semantic_network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "csnsim/errors.hpp"

namespace csn {

std::vector<double> frequency_support(int n_topics, double alpha_c)
{
    if (n_topics <= 0)
        throw ConfigError("frequency support needs at least one topic");
    std::vector<double> support(n_topics);
    double sum = 0.0;
    for (int k = 1; k <= n_topics; ++k) {
        support[k - 1] = std::pow(static_cast<double>(k), -alpha_c);
        sum += support[k - 1];
    }
    for (double& v : support)
        v /= sum;
    return support;
}

RankTable normalized_ranks(std::span<const double> values)
{
    const int n = static_cast<int>(values.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (values[a] != values[b])
            return values[a] > values[b];
        return a < b;
    });
    RankTable t;
    t.r.resize(n);
    for (int k = 0; k < n; ++k)
        t.r[order[k]] = static_cast<double>(k + 1) / static_cast<double>(n);
    return t;
}

void rank_quantize(std::span<double> values, std::span<const double> support,
                   std::span<const int> tie_key)
{
    const int n = static_cast<int>(values.size());
    if (static_cast<int>(support.size()) != n)
        throw RuntimeError("rank_quantize: support size mismatch");
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (values[a] != values[b])
            return values[a] > values[b];
        if (!tie_key.empty() && tie_key[a] != tie_key[b])
            return tie_key[a] < tie_key[b];
        return a < b;
    });
    for (int k = 0; k < n; ++k)
        values[order[k]] = support[k];
}

SemanticNetwork init_general_network(int n_topics, const InitParams& p, Stream& s)
{
    SemanticNetwork net;
    net.n_topics = n_topics;
    net.frequency = frequency_support(n_topics, p.alpha_c);
    net.weight.assign(static_cast<std::size_t>(n_topics) * n_topics, 0.0);
    for (int i = 0; i < n_topics; ++i)
        for (int j = i + 1; j < n_topics; ++j)
            net.set_w(i, j, shifted_lognormal_in(s, p.weight_a, p.weight_b,
                                                 p.weight_s, 0.0, 1.0));
    return net;
}

SemanticNetwork init_community_network(const SemanticNetwork& general,
                                       const InitParams& p, Stream& s)
{
    constexpr double kFloor = 1e-12;
    SemanticNetwork net = general;
    const int n = net.n_topics;
    std::vector<double> support = frequency_support(n, p.alpha_c);

    if (p.sigma_fp > 0.0) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            // Noise scale follows the topic's own support value so the
            // perturbation matters across the whole frequency range.
            double f = net.frequency[i] + normal01(s) * p.sigma_fp * support[i];
            net.frequency[i] = std::max(f, kFloor);
            sum += net.frequency[i];
        }
        for (double& f : net.frequency)
            f /= sum;
        rank_quantize(net.frequency, support);
    }

    if (p.sigma_wp > 0.0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double w = net.w(i, j) + normal01(s) * p.sigma_wp;
                net.set_w(i, j, std::clamp(w, 0.0, 1.0));
            }
    }
    return net;
}

namespace {

void put_g17(std::ostream& os, double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    os << buf;
}

} // namespace

void write_frequency_table(const SemanticNetwork& net, std::ostream& os)
{
    os << "topic_id,frequency\n";
    for (int i = 0; i < net.n_topics; ++i) {
        os << (i + 1) << ',';
        put_g17(os, net.frequency[i]);
        os << '\n';
    }
}

void write_weight_table(const SemanticNetwork& net, std::ostream& os)
{
    os << "i,j,weight\n";
    for (int i = 0; i < net.n_topics; ++i)
        for (int j = i + 1; j < net.n_topics; ++j) {
            os << (i + 1) << ',' << (j + 1) << ',';
            put_g17(os, net.w(i, j));
            os << '\n';
        }
}

} // namespace csn
