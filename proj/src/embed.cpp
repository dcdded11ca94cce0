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
#include "csnsim/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "csnsim/errors.hpp"
#include "csnsim/metrics.hpp"

namespace csn {

PcaResult pca_reduce(const std::vector<std::vector<double>>& rows, int dims)
{
    const int t = static_cast<int>(rows.size());
    if (t < 1) throw RuntimeError("pca_reduce requires at least one row");
    if (dims < 1) throw RuntimeError("pca_reduce requires at least one output dimension");
    const int n = static_cast<int>(rows[0].size());
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n)
            throw RuntimeError("pca_reduce requires rows of equal length");

    Eigen::MatrixXd x(t, n);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;

    const int d = std::min(dims, std::min(t, n));
    PcaResult out;
    out.n_rows = t;
    out.dims = d;
    out.scores.assign(static_cast<std::size_t>(t) * static_cast<std::size_t>(d), 0.0);
    out.eigenvalues.assign(static_cast<std::size_t>(d), 0.0);

    // Eigendecompose the smaller of the two symmetric forms; both share the
    // squared singular values of the centered data.
    if (t <= n) {
        const Eigen::MatrixXd gram = x * x.transpose();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
        double total = 0.0;
        for (int k = 0; k < t; ++k) total += std::max(0.0, eig.eigenvalues()(k));
        double kept = 0.0;
        for (int c = 0; c < d; ++c) {
            const int k = t - 1 - c;  // eigenvalues ascend
            const double lam = std::max(0.0, eig.eigenvalues()(k));
            out.eigenvalues[static_cast<std::size_t>(c)] = lam;
            kept += lam;
            const double scale = std::sqrt(lam);
            for (int i = 0; i < t; ++i)
                out.scores[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                           static_cast<std::size_t>(c)] = eig.eigenvectors()(i, k) * scale;
        }
        out.reconstruction_error = (total - kept) / (static_cast<double>(t) * n);
    } else {
        const Eigen::MatrixXd cov = x.transpose() * x;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
        double total = 0.0;
        for (int k = 0; k < n; ++k) total += std::max(0.0, eig.eigenvalues()(k));
        double kept = 0.0;
        for (int c = 0; c < d; ++c) {
            const int k = n - 1 - c;
            const double lam = std::max(0.0, eig.eigenvalues()(k));
            out.eigenvalues[static_cast<std::size_t>(c)] = lam;
            kept += lam;
            const Eigen::VectorXd proj = x * eig.eigenvectors().col(k);
            for (int i = 0; i < t; ++i)
                out.scores[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                           static_cast<std::size_t>(c)] = proj(i);
        }
        out.reconstruction_error = (total - kept) / (static_cast<double>(t) * n);
    }
    return out;
}

namespace {

/// Conditional neighbor probabilities whose entropy matches the requested
/// perplexity, found per point by bisection on the Gaussian precision.
Eigen::MatrixXd perplexity_probabilities(const Eigen::MatrixXd& d2, double perplexity)
{
    const int t = static_cast<int>(d2.rows());
    const double target = std::log(perplexity);
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(t, t);
    std::vector<double> row(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        double beta = 1.0;
        double beta_lo = 0.0, beta_hi = std::numeric_limits<double>::infinity();
        double sum = 0.0;
        for (int tries = 0; tries < 64; ++tries) {
            sum = 0.0;
            double dot = 0.0;
            for (int j = 0; j < t; ++j) {
                if (j == i) {
                    row[static_cast<std::size_t>(j)] = 0.0;
                    continue;
                }
                const double v = std::exp(-beta * d2(i, j));
                row[static_cast<std::size_t>(j)] = v;
                sum += v;
                dot += v * d2(i, j);
            }
            if (!(sum > 0.0)) {  // all neighbors infinitely far at this beta
                beta_hi = beta;
                beta = 0.5 * (beta_lo + beta_hi);
                continue;
            }
            const double entropy = std::log(sum) + beta * dot / sum;
            const double diff = entropy - target;
            if (std::abs(diff) < 1e-7) break;
            if (diff > 0.0) {
                beta_lo = beta;
                beta = std::isinf(beta_hi) ? beta * 2.0 : 0.5 * (beta_lo + beta_hi);
            } else {
                beta_hi = beta;
                beta = 0.5 * (beta_lo + beta_hi);
            }
        }
        if (sum > 0.0)
            for (int j = 0; j < t; ++j) p(i, j) = row[static_cast<std::size_t>(j)] / sum;
    }
    return p;
}

} // namespace

Trajectory project_trajectory(const std::vector<std::vector<double>>& profiles,
                              const TrajectoryOptions& opts, Stream& stream)
{
    const int t = static_cast<int>(profiles.size());
    if (t < 5) throw RuntimeError("trajectory projection requires at least five time points");
    if (opts.iters < 1) throw RuntimeError("trajectory projection requires at least one iteration");

    const PcaResult pca = pca_reduce(profiles, opts.pca_dims);
    const int d = pca.dims;
    auto score = [&pca, d](int i, int c) {
        return pca.scores[static_cast<std::size_t>(i) * static_cast<std::size_t>(d) +
                          static_cast<std::size_t>(c)];
    };

    Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(t, t);
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            double acc = 0.0;
            for (int c = 0; c < d; ++c) {
                const double diff = score(i, c) - score(j, c);
                acc += diff * diff;
            }
            d2(i, j) = d2(j, i) = acc;
        }

    const double perp = std::max(1.01, std::min(opts.perplexity, (t - 1) / 3.0));
    const Eigen::MatrixXd cond = perplexity_probabilities(d2, perp);
    Eigen::MatrixXd p = (cond + cond.transpose()) / (2.0 * t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (i != j) p(i, j) = std::max(p(i, j), 1e-12);

    // Initialize from the first two components, scaled to a tiny spread.
    Eigen::MatrixXd y = Eigen::MatrixXd::Zero(t, 2);
    for (int c = 0; c < std::min(2, d); ++c) {
        double var = 0.0;
        for (int i = 0; i < t; ++i) var += score(i, c) * score(i, c);
        const double sd = std::sqrt(var / t);
        if (sd > 0.0)
            for (int i = 0; i < t; ++i) y(i, c) = score(i, c) / sd * 1e-4;
    }
    // Distinct profiles that project to the same point get a seeded nudge;
    // identical profiles are left coincident on purpose.
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            if (y(i, 0) == y(j, 0) && y(i, 1) == y(j, 1) && d2(i, j) > 0.0) {
                y(j, 0) += 1e-8 * normal01(stream);
                y(j, 1) += 1e-8 * normal01(stream);
            }

    Eigen::MatrixXd vel = Eigen::MatrixXd::Zero(t, 2);
    Eigen::MatrixXd gains = Eigen::MatrixXd::Ones(t, 2);
    Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(t, 2);
    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(t, t);
    for (int iter = 0; iter < opts.iters; ++iter) {
        const double exag = iter < opts.exaggeration_iters ? opts.exaggeration : 1.0;
        double num_sum = 0.0;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                const double dx = y(i, 0) - y(j, 0);
                const double dy = y(i, 1) - y(j, 1);
                const double v = 1.0 / (1.0 + dx * dx + dy * dy);
                num(i, j) = num(j, i) = v;
                num_sum += 2.0 * v;
            }
        grad.setZero();
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) {
                if (i == j) continue;
                const double q = num(i, j) / num_sum;
                const double mult = 4.0 * (exag * p(i, j) - q) * num(i, j);
                grad(i, 0) += mult * (y(i, 0) - y(j, 0));
                grad(i, 1) += mult * (y(i, 1) - y(j, 1));
            }
        const double momentum = iter < 250 ? 0.5 : 0.8;
        for (int i = 0; i < t; ++i)
            for (int c = 0; c < 2; ++c) {
                const bool same = (grad(i, c) > 0.0) == (vel(i, c) > 0.0);
                gains(i, c) = same ? std::max(0.01, gains(i, c) * 0.8) : gains(i, c) + 0.2;
                vel(i, c) = momentum * vel(i, c) - opts.learning_rate * gains(i, c) * grad(i, c);
                y(i, c) += vel(i, c);
            }
        const Eigen::RowVector2d center = y.colwise().mean();
        y.rowwise() -= center;
    }

    Trajectory out;
    out.x.resize(static_cast<std::size_t>(t));
    out.y.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        out.x[static_cast<std::size_t>(i)] = y(i, 0);
        out.y[static_cast<std::size_t>(i)] = y(i, 1);
    }
    out.smooth_x = block_average(out.x, opts.smooth_window);
    out.smooth_y = block_average(out.y, opts.smooth_window);
    return out;
}

} // namespace csn
