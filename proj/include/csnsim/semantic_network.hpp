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

#include <iosfwd>
#include <span>
#include <vector>

#include "csnsim/rng.hpp"

namespace csn {

/// Complete weighted topic graph with normalized per-topic frequencies.
/// Weights are stored as a dense symmetric matrix with zero diagonal.
struct SemanticNetwork {
    int n_topics = 0;
    std::vector<double> frequency;   // size n_topics, sums to 1
    std::vector<double> weight;      // n_topics * n_topics, symmetric

    double w(int i, int j) const { return weight[static_cast<std::size_t>(i) * n_topics + j]; }
    void set_w(int i, int j, double v)
    {
        weight[static_cast<std::size_t>(i) * n_topics + j] = v;
        weight[static_cast<std::size_t>(j) * n_topics + i] = v;
    }
};

struct InitParams {
    double alpha_c = 1.0;      // decay exponent of the frequency support
    double weight_a = -0.65;   // shifted log-normal weight distribution
    double weight_b = 1.0;
    double weight_s = 0.12;
    double sigma_fp = 0.0;     // community frequency perturbation
    double sigma_wp = 0.0;     // community weight perturbation
};

/// Normalized frequency ranks: r_i = rank(f_i)/N with rank 1 for the most
/// frequent topic. Ties break toward the lower topic index.
struct RankTable {
    std::vector<double> r;

    int n() const { return static_cast<int>(r.size()); }
    /// Integer rank in 1..N.
    int rank_of(int topic) const
    {
        return static_cast<int>(r[topic] * static_cast<double>(r.size()) + 0.5);
    }
};

/// The quantized frequency ladder: value at rank k is k^(-alpha_c)/C with C
/// normalizing the sum to 1. Index 0 holds the rank-1 (largest) value.
std::vector<double> frequency_support(int n_topics, double alpha_c);

RankTable normalized_ranks(std::span<const double> values);

/// Replace values with support[rank-1]: the k-th largest value becomes the
/// k-th support entry. Ties break by the tie_key (ascending); with an empty
/// tie_key the topic index is used.
void rank_quantize(std::span<double> values, std::span<const double> support,
                   std::span<const int> tie_key = {});

/// General network: deterministic frequencies (topic i holds rank i+1) and
/// weights drawn from the shifted log-normal rejected into [0, 1].
SemanticNetwork init_general_network(int n_topics, const InitParams& p, Stream& s);

/// Community network: general frequencies perturbed by N(0, sigma_fp) scaled
/// by the topic's support value, floored at a small positive epsilon,
/// renormalized and re-quantized onto the support; weights perturbed by
/// N(0, sigma_wp) and clamped to [0, 1].
SemanticNetwork init_community_network(const SemanticNetwork& general,
                                       const InitParams& p, Stream& s);

/// Flat table "topic_id,frequency" with 1-based topic ids.
void write_frequency_table(const SemanticNetwork& net, std::ostream& os);

/// Dense pair table "i,j,weight" over i < j, 1-based ids.
void write_weight_table(const SemanticNetwork& net, std::ostream& os);

} // namespace csn
