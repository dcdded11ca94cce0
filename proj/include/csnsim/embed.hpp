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

#include <vector>

#include "csnsim/rng.hpp"

namespace csn {

/// Principal-component scores of a set of row vectors (one row per time
/// point), after centering. Components with zero variance contribute zero
/// scores, so requesting more dimensions than the data's rank is safe.
struct PcaResult {
    int n_rows = 0;
    int dims = 0;
    std::vector<double> scores;        // row-major n_rows x dims
    std::vector<double> eigenvalues;   // descending, one per retained component
    double reconstruction_error = 0.0; // mean squared error per matrix entry
};

PcaResult pca_reduce(const std::vector<std::vector<double>>& rows, int dims);

struct TrajectoryOptions {
    int pca_dims = 50;
    int smooth_window = 25;
    double perplexity = 30.0;  // clamped to what the series length supports
    int iters = 1000;
    double learning_rate = 200.0;
    double exaggeration = 12.0;
    int exaggeration_iters = 250;
};

struct Trajectory {
    std::vector<double> x, y;
    std::vector<double> smooth_x, smooth_y;
};

/// Embeds a profile time series into 2-D: center, project to the leading
/// principal components, then run exact (all-pairs) t-SNE initialized from
/// the first two components. The stream only breaks exact projection ties
/// between distinct profiles, so identical inputs stay coincident. Also
/// returns the block-averaged smoothed trajectory. Fails on fewer than five
/// time points. Fitting several conditions jointly is concatenating their
/// profile series before the call.
Trajectory project_trajectory(const std::vector<std::vector<double>>& profiles,
                              const TrajectoryOptions& opts, Stream& stream);

} // namespace csn
