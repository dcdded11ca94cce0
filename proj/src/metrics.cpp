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
#include "csnsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "csnsim/errors.hpp"

namespace csn {

namespace {

/// Counts inversions in `seq` by merge sort. `buf` must match seq's size.
std::uint64_t count_inversions(std::vector<int>& seq, std::vector<int>& buf,
                               std::size_t lo, std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::uint64_t inv = count_inversions(seq, buf, lo, mid) +
                        count_inversions(seq, buf, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (seq[i] <= seq[j]) {
            buf[k++] = seq[i++];
        } else {
            inv += mid - i;
            buf[k++] = seq[j++];
        }
    }
    while (i < mid) buf[k++] = seq[i++];
    while (j < hi) buf[k++] = seq[j++];
    std::copy(buf.begin() + static_cast<std::ptrdiff_t>(lo),
              buf.begin() + static_cast<std::ptrdiff_t>(hi),
              seq.begin() + static_cast<std::ptrdiff_t>(lo));
    return inv;
}

} // namespace

double kendall_tau_distance(const RankTable& a, const RankTable& b) {
    const int n = a.n();
    if (b.n() != n)
        throw RuntimeError("kendall_tau_distance requires rankings over the same topics");
    if (n < 2) throw RuntimeError("kendall_tau_distance requires at least two topics");
    // Order topics by the first ranking, then count how many pairs the second
    // ranking places in the opposite order.
    std::vector<int> topics(static_cast<std::size_t>(n));
    std::iota(topics.begin(), topics.end(), 0);
    std::sort(topics.begin(), topics.end(),
              [&a](int i, int j) { return a.rank_of(i) < a.rank_of(j); });
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = b.rank_of(topics[static_cast<std::size_t>(i)]);
    std::vector<int> buf(seq.size());
    const std::uint64_t inv = count_inversions(seq, buf, 0, seq.size());
    const double pairs = 0.5 * n * (n - 1);
    return static_cast<double>(inv) / pairs;
}

std::vector<double> comment_topic_profile(const CommentNetwork& comments) {
    double total = 0.0;
    for (double m : comments.topic_mass) total += m;
    if (!(total > 0.0))
        throw RuntimeError("comment_topic_profile requires positive total comment mass");
    std::vector<double> profile(comments.topic_mass.size());
    for (std::size_t i = 0; i < profile.size(); ++i)
        profile[i] = comments.topic_mass[i] / total;
    return profile;
}

RatioSeries ensemble_ratio(const EnsembleStat& influenced, const EnsembleStat& baseline) {
    const std::size_t t = influenced.mean.size();
    if (baseline.mean.size() != t || influenced.stdev.size() != t ||
        baseline.stdev.size() != t)
        throw RuntimeError("ensemble_ratio requires series of equal length");
    RatioSeries out;
    out.ratio.resize(t);
    out.band.resize(t);
    for (std::size_t k = 0; k < t; ++k) {
        const double mb = baseline.mean[k];
        if (mb == 0.0)
            throw RuntimeError("ensemble_ratio requires a nonzero baseline mean at every step");
        const double r = influenced.mean[k] / mb;
        // First-order propagation for a quotient of independent ensembles:
        // var(r) ~ var_i / mb^2 + r^2 var_b / mb^2.
        const double si = influenced.stdev[k];
        const double sb = baseline.stdev[k];
        out.ratio[k] = r;
        out.band[k] = std::sqrt(si * si + r * r * sb * sb) / std::abs(mb);
    }
    return out;
}

QuantileSets similarity_quantile_sets(std::span<const double> initial_target_row,
                                      int target, double quantile) {
    const int n = static_cast<int>(initial_target_row.size());
    if (n < 2) throw RuntimeError("similarity quantile sets require at least two topics");
    if (target < 0 || target >= n)
        throw RuntimeError("similarity quantile sets require a valid target topic");
    if (!(quantile > 0.0) || quantile > 1.0)
        throw RuntimeError("similarity quantile must lie in (0, 1]");
    std::vector<int> others;
    others.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i)
        if (i != target) others.push_back(i);
    int size = static_cast<int>(std::floor(n * quantile));
    size = std::clamp(size, 1, n - 1);
    // Stable sorts keep ties ordered by topic index.
    QuantileSets sets;
    std::stable_sort(others.begin(), others.end(), [&](int i, int j) {
        return initial_target_row[static_cast<std::size_t>(i)] >
               initial_target_row[static_cast<std::size_t>(j)];
    });
    sets.top.assign(others.begin(), others.begin() + size);
    std::stable_sort(others.begin(), others.end(), [&](int i, int j) {
        return initial_target_row[static_cast<std::size_t>(i)] <
               initial_target_row[static_cast<std::size_t>(j)];
    });
    sets.bottom.assign(others.begin(), others.begin() + size);
    return sets;
}

std::pair<double, double> similarity_quantile_diff(std::span<const double> target_row,
                                                   std::span<const double> baseline_row,
                                                   const QuantileSets& sets) {
    if (target_row.size() != baseline_row.size())
        throw RuntimeError("similarity quantile diff requires rows of equal length");
    auto mean_diff = [&](const std::vector<int>& set) {
        double acc = 0.0;
        for (int i : set) {
            const auto k = static_cast<std::size_t>(i);
            acc += target_row[k] - baseline_row[k];
        }
        return set.empty() ? 0.0 : acc / static_cast<double>(set.size());
    };
    return {mean_diff(sets.top), mean_diff(sets.bottom)};
}

namespace {

/// Exact 1-D total-variation denoising for (1/2) sum (x-y)^2 + lam * TV(y),
/// the direct taut-string sweep: segments grow until the running residual
/// forces a jump, then restart after the jump.
std::vector<double> tv_halfsq(std::span<const double> y, double lam) {
    const int n = static_cast<int>(y.size());
    std::vector<double> x(static_cast<std::size_t>(n));
    if (n == 0) return x;
    if (!(lam > 0.0)) {
        std::copy(y.begin(), y.end(), x.begin());
        return x;
    }
    int k = 0, k0 = 0, km = 0, kp = 0;
    double vmin = y[0] - lam, vmax = y[0] + lam;
    double umin = lam, umax = -lam;
    auto at = [&y](int i) { return y[static_cast<std::size_t>(i)]; };
    for (;;) {
        if (k == n - 1) {
            if (umin < 0.0) {
                for (int i = k0; i <= km; ++i) x[static_cast<std::size_t>(i)] = vmin;
                k = k0 = km = km + 1;
                vmin = at(k);
                umin = lam;
                umax = at(k) + lam - vmax;
                continue;
            }
            if (umax > 0.0) {
                for (int i = k0; i <= kp; ++i) x[static_cast<std::size_t>(i)] = vmax;
                k = k0 = kp = kp + 1;
                vmax = at(k);
                umax = -lam;
                umin = at(k) - lam - vmin;
                continue;
            }
            const double v = vmin + umin / (k - k0 + 1);
            for (int i = k0; i < n; ++i) x[static_cast<std::size_t>(i)] = v;
            return x;
        }
        if (at(k + 1) + umin < vmin - lam) {
            // The lower bound broke: the segment ends with a downward jump.
            for (int i = k0; i <= km; ++i) x[static_cast<std::size_t>(i)] = vmin;
            k = k0 = km = kp = km + 1;
            vmin = at(k);
            vmax = at(k) + 2.0 * lam;
            umin = lam;
            umax = -lam;
        } else if (at(k + 1) + umax > vmax + lam) {
            // The upper bound broke: upward jump.
            for (int i = k0; i <= kp; ++i) x[static_cast<std::size_t>(i)] = vmax;
            k = k0 = km = kp = kp + 1;
            vmin = at(k) - 2.0 * lam;
            vmax = at(k);
            umin = lam;
            umax = -lam;
        } else {
            ++k;
            umin += at(k) - vmin;
            umax += at(k) - vmax;
            if (umin >= lam) {
                vmin += (umin - lam) / (k - k0 + 1);
                umin = lam;
                km = k;
            }
            if (umax <= -lam) {
                vmax += (umax + lam) / (k - k0 + 1);
                umax = -lam;
                kp = k;
            }
        }
    }
}

} // namespace

std::vector<double> tv_denoise(std::span<const double> x, double lam) {
    if (lam < 0.0) throw RuntimeError("tv_denoise requires a nonnegative penalty");
    // The mean-squared data term weighs each residual by 1/n, so the
    // equivalent half-squared problem scales the penalty by n/2.
    const double scaled = lam * static_cast<double>(x.size()) / 2.0;
    return tv_halfsq(x, scaled);
}

std::vector<double> block_average(std::span<const double> x, int window) {
    if (window < 1) throw RuntimeError("block_average requires a positive window");
    std::vector<double> out(x.size());
    for (std::size_t start = 0; start < x.size(); start += static_cast<std::size_t>(window)) {
        const std::size_t end = std::min(x.size(), start + static_cast<std::size_t>(window));
        double acc = 0.0;
        for (std::size_t i = start; i < end; ++i) acc += x[i];
        const double mean = acc / static_cast<double>(end - start);
        for (std::size_t i = start; i < end; ++i) out[i] = mean;
    }
    return out;
}

} // namespace csn
