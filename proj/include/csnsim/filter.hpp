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
#include <vector>

#include "csnsim/events.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

namespace csn {

struct FilterParams {
    double r1 = 0.5;                          // stage-1 survival ratio
    double r2 = 0.5;                          // stage-2 survival ratio
    std::vector<double> alpha{0.4, 0.2, 0.1}; // per-tier popularity exponents
};

/// The editors' blended view of the community and general networks.
/// Frequencies may leave [0,1] when lambda_f > 1 (hypersensitive editors);
/// only their ranks are consumed downstream. Blended weights are kept raw
/// here and floored at zero where they are used multiplicatively.
struct BlendedView {
    std::vector<double> frequency;
    std::vector<double> weight;    // dense symmetric blend of pair weights
    RankTable ranks;
    int n_topics = 0;

    double w(int i, int j) const
    {
        return weight[static_cast<std::size_t>(i) * n_topics + j];
    }
};

/// Blend f = lambda_f*community + (1-lambda_f)*perceived general, same for
/// weights (against the true general weights).
BlendedView blended_view(const SemanticNetwork& community,
                         std::span<const double> general_frequency,
                         const SemanticNetwork& general, double lambda_f);

/// Stage 1: weighted sampling without replacement of floor(r1*n) events with
/// per-event weight prod_q rank(z_q)^(-alpha_q/r2). Output in draw order.
EventBatch stage1_select(const EventBatch& events, const BlendedView& view,
                         const FilterParams& p, Stream& s);

/// Stage 2: keep the top floor(r2*n) events by the product of blended pair
/// weights (floored at 0) over unordered tier pairs; ties break by input
/// order, and survivors keep their input order.
EventBatch stage2_select(const EventBatch& events, const BlendedView& view,
                         const FilterParams& p);

/// Both stages back to back; returns exactly floor(r2*floor(r1*n)) news.
EventBatch filter_events(const EventBatch& events, const BlendedView& view,
                         const FilterParams& p, Stream& s);

} // namespace csn
