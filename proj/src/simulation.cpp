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
#include "csnsim/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <semaphore>
#include <thread>

#include "csnsim/errors.hpp"
#include "csnsim/events.hpp"

namespace csn {

const std::vector<std::string>& metric_names()
{
    static const std::vector<std::string> names{
        "kd_general_comment", "kd_step_change",   "comment_target_share",
        "news_target_any",    "news_target_tier1", "news_target_tier2",
        "news_target_tier3",  "freq_target",       "w_target_top20",
        "w_target_bot20",     "overflow_fraction", "total_comment_mass",
        "sum_freq_error",     "max_weight"};
    return names;
}

int metric_index(const std::string& name)
{
    const auto& names = metric_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    throw RuntimeError("unknown metric: " + name);
}

void validate_scenario(const ScenarioParams& sp)
{
    const ModelParams& mp = sp.model;
    if (mp.n_topics < 2) throw ConfigError("n_topics must be at least 2");
    if (mp.n_events < 1) throw ConfigError("n_events must be positive");
    if (mp.n_tiers < 1 || mp.n_tiers >= mp.n_topics)
        throw ConfigError("n_tiers must be in [1, n_topics)");
    if (mp.horizon < 0) throw ConfigError("horizon must be nonnegative");
    if (mp.lambda_f < 0.0) throw ConfigError("lambda_f must be nonnegative");
    if (mp.lambda_m < 0.0 || mp.lambda_m > 1.0)
        throw ConfigError("lambda_m must lie in [0, 1]");
    if (mp.lambda_e < 0.0 || mp.lambda_e > 1.0)
        throw ConfigError("lambda_e must lie in [0, 1]");
    if (sp.target_topic < 0 || sp.target_topic >= mp.n_topics)
        throw ConfigError("target_topic out of range");
    if (sp.target_tier < 0 || sp.target_tier >= mp.n_tiers)
        throw ConfigError("target_tier out of range");
    if (!(sp.quantile > 0.0) || sp.quantile > 1.0)
        throw ConfigError("quantile must lie in (0, 1]");
    if (static_cast<int>(mp.filter.alpha.size()) != mp.n_tiers)
        throw ConfigError("filter.alpha needs one exponent per tier");
    if (static_cast<int>(mp.comments.zero_ratio.size()) != mp.n_tiers ||
        static_cast<int>(mp.comments.rate_a.size()) != mp.n_tiers)
        throw ConfigError("comment tier parameter lists need one entry per tier");
    validate_schedule(sp.schedule, mp.horizon, mp.n_topics, mp.n_tiers);
}

RunRecords run_simulation(const ScenarioParams& sp, std::uint64_t master_seed,
                          std::uint64_t replica, const RunOptions& opts)
{
    validate_scenario(sp);
    const ModelParams& mp = sp.model;
    const int n = mp.n_topics;
    const int horizon = mp.horizon;
    const int target = sp.target_topic;

    Stream s_init(master_seed, replica, "init");
    SemanticNetwork general = init_general_network(n, mp.init, s_init);
    SemanticNetwork community = init_community_network(general, mp.init, s_init);
    const std::vector<double> support = frequency_support(n, mp.init.alpha_c);
    const RankTable general_ranks = normalized_ranks(general.frequency);
    const Harmonics harmonics(n);

    Stream s_events(master_seed, replica, "events");
    Stream s_filter(master_seed, replica, "filter");
    Stream s_reframe(master_seed, replica, "reframe");
    Stream s_comments(master_seed, replica, "comments");
    Stream s_update(master_seed, replica, "update");

    // Similarity quantile sets are fixed by the initial community network.
    std::vector<double> init_row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) init_row[static_cast<std::size_t>(j)] = community.w(target, j);
    const QuantileSets sets = similarity_quantile_sets(init_row, target, sp.quantile);

    RunRecords out;
    const std::size_t n_metrics = metric_names().size();
    out.series.assign(n_metrics, {});
    for (auto& v : out.series) v.reserve(static_cast<std::size_t>(horizon));
    if (opts.track_profiles) out.profiles.reserve(static_cast<std::size_t>(horizon));
    if (opts.track_tier_ranks)
        out.tier_rank_counts.assign(static_cast<std::size_t>(mp.n_tiers),
                                    std::vector<double>(static_cast<std::size_t>(n), 0.0));

    std::vector<double> event_dist = base_event_distribution(general_ranks);
    UpdateScratch scratch;

    enum MetricId {
        m_kd = 0, m_kd_change, m_target_share, m_news_any, m_news_t1, m_news_t2,
        m_news_t3, m_freq_target, m_w_top, m_w_bot, m_overflow, m_total_mass,
        m_sum_err, m_max_w
    };
    auto rec = [&out](int id, double v) {
        out.series[static_cast<std::size_t>(id)].push_back(v);
    };

    double kd_prev = 0.0;
    bool have_prev = false;
    long long overflow_total = 0, news_total = 0;
    double excess_total = 0.0, assigned_total = 0.0;

    const bool periodic = opts.want_snapshots && opts.snapshot_every > 0;
    for (int t = 0;; ++t) {
        if (periodic && t % opts.snapshot_every == 0) out.snapshots.emplace_back(t, community);
        if (t == horizon) break;
        try {
            const StepParams stp = resolve_schedule(sp.schedule, mp.lambda_f, mp.lambda_m, t);

            // The general network is immutable; shocks act through a view.
            const SemanticNetwork* gen = &general;
            SemanticNetwork shocked;
            RankTable gr = general_ranks;
            if (stp.shock_boost != 1.0 && stp.shock_target >= 0) {
                shocked = shocked_network(general, stp.shock_boost, stp.shock_target, support);
                gen = &shocked;
                gr = normalized_ranks(shocked.frequency);
            }

            event_dist = evolve_event_distribution(event_dist, gr, mp.lambda_e,
                                                   mp.n_events, s_events);
            const EventBatch events =
                generate_events(event_dist, mp.n_events, mp.n_tiers, s_events);
            const std::vector<double> perceived =
                amplified_frequencies(gen->frequency, stp.s_amp, stp.amp_target);
            const BlendedView view = blended_view(community, perceived, *gen, stp.lambda_f);
            EventBatch news = filter_events(events, view, mp.filter, s_filter);
            apply_reframing(news, stp.p_ref, stp.reframe_topic, stp.reframe_tier, s_reframe);

            const RankTable community_ranks = normalized_ranks(community.frequency);
            const CommentInfluence ci{stp.s_tr, stp.troll_target, stp.s_cs};
            const CommentNetwork comments = generate_comments(
                news, community, community_ranks, mp.comments, ci, harmonics, s_comments);

            std::vector<double> profile = comment_topic_profile(comments);
            const double kd =
                kendall_tau_distance(general_ranks, normalized_ranks(profile));
            rec(m_kd, kd);
            rec(m_kd_change, have_prev ? std::abs(kd - kd_prev) : 0.0);
            kd_prev = kd;
            have_prev = true;
            rec(m_target_share, profile[static_cast<std::size_t>(target)]);

            int any = 0;
            std::array<int, 3> per_tier{0, 0, 0};
            for (int i = 0; i < news.size(); ++i) {
                bool hit = false;
                for (int q = 0; q < mp.n_tiers; ++q) {
                    const int topic = news.topic(i, q);
                    if (topic == target) {
                        hit = true;
                        if (q < 3) ++per_tier[static_cast<std::size_t>(q)];
                    }
                    if (opts.track_tier_ranks)
                        out.tier_rank_counts[static_cast<std::size_t>(q)]
                                            [static_cast<std::size_t>(
                                                view.ranks.rank_of(topic) - 1)] += 1.0;
                }
                if (hit) ++any;
            }
            const double inv_news = news.size() > 0 ? 1.0 / news.size() : 0.0;
            rec(m_news_any, any * inv_news);
            rec(m_news_t1, per_tier[0] * inv_news);
            rec(m_news_t2, per_tier[1] * inv_news);
            rec(m_news_t3, per_tier[2] * inv_news);
            rec(m_freq_target, community.frequency[static_cast<std::size_t>(target)]);

            std::vector<double> row(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = community.w(target, j);
            const auto gains = similarity_quantile_diff(row, init_row, sets);
            rec(m_w_top, gains.first);
            rec(m_w_bot, gains.second);

            rec(m_overflow, comments.news_count > 0
                                ? static_cast<double>(comments.overflow_count) / comments.news_count
                                : 0.0);
            rec(m_total_mass, comments.total_mass);
            overflow_total += comments.overflow_count;
            news_total += comments.news_count;
            excess_total += comments.excess_mass;
            assigned_total += comments.assigned_mass;
            if (opts.track_profiles) out.profiles.push_back(std::move(profile));

            update_frequencies(community, comments.topic_mass, stp.lambda_m, support);
            update_weights(community, comments, mp.update, s_update, scratch);

            double sum_f = 0.0;
            for (double f : community.frequency) sum_f += f;
            rec(m_sum_err, std::abs(sum_f - 1.0));
            rec(m_max_w, *std::max_element(community.weight.begin(), community.weight.end()));
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            throw RuntimeError("step " + std::to_string(t) + ": " + e.what());
        }
    }

    out.scalars["kd_final"] = have_prev ? kd_prev : 0.0;
    out.scalars["overflow_incidence"] =
        news_total > 0 ? static_cast<double>(overflow_total) / static_cast<double>(news_total) : 0.0;
    out.scalars["excess_mass_fraction"] =
        assigned_total > 0.0 ? excess_total / assigned_total : 0.0;
    out.scalars["news_per_step"] =
        horizon > 0 ? static_cast<double>(news_total) / horizon : 0.0;
    out.scalars["comment_mass_mean"] =
        news_total > 0 ? assigned_total / static_cast<double>(news_total) : 0.0;
    return out;
}

EnsembleResult run_ensemble(const ScenarioParams& sp, int n_replicas,
                            std::uint64_t master_seed, int jobs,
                            const RunOptions& opts)
{
    if (n_replicas < 1) throw ConfigError("n_replicas must be positive");
    validate_scenario(sp);
    jobs = std::clamp(jobs, 1, n_replicas);

    const std::size_t n_metrics = metric_names().size();
    const int horizon = sp.model.horizon;

    EnsembleResult res;
    res.horizon = horizon;
    res.n_replicas = n_replicas;
    res.metric_stats.assign(n_metrics, {});
    for (auto& st : res.metric_stats) {
        st.mean.assign(static_cast<std::size_t>(horizon), 0.0);
        st.stdev.assign(static_cast<std::size_t>(horizon), 0.0);
        st.n = n_replicas;
    }
    std::vector<std::vector<double>> m2(n_metrics,
                                        std::vector<double>(static_cast<std::size_t>(horizon), 0.0));
    std::map<std::string, std::array<double, 2>> scalar_acc;  // mean, M2
    if (opts.track_profiles)
        res.mean_profiles.assign(static_cast<std::size_t>(horizon),
                                 std::vector<double>(static_cast<std::size_t>(sp.model.n_topics), 0.0));

    // Workers fill per-replica slots; the main thread folds finished slots in
    // replica order, which pins the floating-point reduction order no matter
    // how many threads run or how they interleave. The semaphore bounds how
    // many unfolded results can exist at once.
    std::vector<std::unique_ptr<RunRecords>> slots(static_cast<std::size_t>(n_replicas));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_replicas));
    std::vector<char> ready(static_cast<std::size_t>(n_replicas), 0);
    std::atomic<int> next{0};
    std::counting_semaphore<> tickets(jobs + 2);
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&]() {
        for (;;) {
            tickets.acquire();
            const int k = next.fetch_add(1);
            if (k >= n_replicas) {
                tickets.release();
                return;
            }
            RunOptions ro = opts;
            ro.want_snapshots = opts.want_snapshots && k == 0;
            std::unique_ptr<RunRecords> r;
            std::exception_ptr ep;
            try {
                r = std::make_unique<RunRecords>(
                    run_simulation(sp, master_seed, static_cast<std::uint64_t>(k), ro));
            } catch (...) {
                ep = std::current_exception();
            }
            {
                std::lock_guard<std::mutex> lk(mu);
                slots[static_cast<std::size_t>(k)] = std::move(r);
                errors[static_cast<std::size_t>(k)] = ep;
                ready[static_cast<std::size_t>(k)] = 1;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);

    std::exception_ptr first_error;
    for (int k = 0; k < n_replicas; ++k) {
        std::unique_ptr<RunRecords> r;
        {
            std::unique_lock<std::mutex> lk(mu);
            cv.wait(lk, [&] { return ready[static_cast<std::size_t>(k)] != 0; });
            r = std::move(slots[static_cast<std::size_t>(k)]);
            if (!first_error) first_error = errors[static_cast<std::size_t>(k)];
        }
        if (r && !first_error) {
            const double cnt = k + 1;
            for (std::size_t m = 0; m < n_metrics; ++m) {
                const auto& xs = r->series[m];
                auto& st = res.metric_stats[m];
                for (int t = 0; t < horizon; ++t) {
                    const double x = xs[static_cast<std::size_t>(t)];
                    const double d = x - st.mean[static_cast<std::size_t>(t)];
                    st.mean[static_cast<std::size_t>(t)] += d / cnt;
                    m2[m][static_cast<std::size_t>(t)] +=
                        d * (x - st.mean[static_cast<std::size_t>(t)]);
                }
            }
            for (const auto& [name, x] : r->scalars) {
                auto& acc = scalar_acc[name];
                const double d = x - acc[0];
                acc[0] += d / cnt;
                acc[1] += d * (x - acc[0]);
            }
            if (opts.track_profiles)
                for (int t = 0; t < horizon; ++t) {
                    const auto& p = r->profiles[static_cast<std::size_t>(t)];
                    auto& acc = res.mean_profiles[static_cast<std::size_t>(t)];
                    for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += p[j];
                }
            if (k == 0) res.first_replica.snapshots = std::move(r->snapshots);
        }
        r.reset();
        tickets.release();
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);

    for (std::size_t m = 0; m < n_metrics; ++m)
        for (int t = 0; t < horizon; ++t)
            res.metric_stats[m].stdev[static_cast<std::size_t>(t)] =
                std::sqrt(m2[m][static_cast<std::size_t>(t)] / n_replicas);
    for (const auto& [name, acc] : scalar_acc)
        res.scalar_stats[name] =
            ScalarStat{acc[0], std::sqrt(acc[1] / n_replicas), n_replicas};
    if (opts.track_profiles)
        for (auto& rowv : res.mean_profiles)
            for (double& v : rowv) v /= n_replicas;
    return res;
}

} // namespace csn
