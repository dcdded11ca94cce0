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

#include "csnsim/comments.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

namespace csn {

struct UpdateParams {
    double eta = 10.0;        // Hebbian learning rate
    double w_max = 0.8;       // weight ceiling (also saturates the increment)
    double sigma_wn = 0.001;  // per-pair weight noise
    // When set, the Hebbian and decay terms replace the previous weight
    // instead of incrementing it. Off by default: the incremental form keeps
    // untouched weights stable between steps.
    bool literal_hebbian = false;
};

/// Reusable per-pair buffers so the step loop does not reallocate.
struct UpdateScratch {
    std::vector<double> eps;
};

/// Blend the current frequencies with the step's normalized comment masses,
/// then snap the blend back onto the rank-frequency support. Ties in the
/// blended values keep the previous ranking.
void update_frequencies(SemanticNetwork& community,
                        std::span<const double> comment_mass, double lambda_m,
                        std::span<const double> support);

/// Hebbian reinforcement of co-commented topic pairs with multiplicative
/// normalization: the total weight gain (including noise) is redistributed as
/// a uniform relative decay so the network's weight budget is conserved
/// before clamping.
void update_weights(SemanticNetwork& community, const CommentNetwork& comments,
                    const UpdateParams& p, Stream& s, UpdateScratch& scratch);

} // namespace csn
