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
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "csnsim/errors.hpp"
#include "csnsim/events.hpp"
#include "csnsim/influence.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

namespace {

csn::InfluenceEntry entry(csn::InfluenceKind kind, int t0, int t1, double s,
                          int topic = -1, int tier = -1)
{
    return {kind, t0, t1, s, topic, tier};
}

csn::EventBatch batch_of(int n_tiers, std::vector<std::int32_t> topics)
{
    csn::EventBatch b;
    b.n_tiers = n_tiers;
    b.topics = std::move(topics);
    return b;
}

} // namespace

TEST_CASE("schedule resolution follows half-open windows")
{
    std::vector<csn::InfluenceEntry> sched{
        entry(csn::InfluenceKind::alignment, 100, 300, 0.8),
        entry(csn::InfluenceKind::turnover, 150, 250, 0.95),
    };
    csn::validate_schedule(sched, 500, 250, 3);

    auto at = [&](int t) { return csn::resolve_schedule(sched, 0.2, 0.99, t); };
    CHECK(at(99).lambda_f == 0.2);
    CHECK(at(100).lambda_f == 0.8);
    CHECK(at(200).lambda_f == 0.8);
    CHECK(at(299).lambda_f == 0.8);
    CHECK(at(300).lambda_f == 0.2);  // reverts exactly at the window end
    CHECK(at(149).lambda_m == 0.99);
    CHECK(at(150).lambda_m == 0.95);
    CHECK(at(249).lambda_m == 0.95);
    CHECK(at(250).lambda_m == 0.99);

    SUBCASE("multiplicative influences are neutral outside their windows")
    {
        std::vector<csn::InfluenceEntry> s2{
            entry(csn::InfluenceKind::troll, 100, 300, 1.5, 24),
            entry(csn::InfluenceKind::counterspeech, 100, 300, 3.0),
            entry(csn::InfluenceKind::amplification, 100, 300, 25.0, 24),
            entry(csn::InfluenceKind::reframing, 100, 300, 0.04, 24, 1),
            entry(csn::InfluenceKind::external_shock, 100, 300, 10.0, 24),
        };
        csn::validate_schedule(s2, 500, 250, 3);
        auto off = csn::resolve_schedule(s2, 0.2, 0.99, 99);
        CHECK(off.s_tr == 1.0);
        CHECK(off.s_cs == 1.0);
        CHECK(off.s_amp == 1.0);
        CHECK(off.p_ref == 0.0);
        CHECK(off.shock_boost == 1.0);
        CHECK(off.troll_target == -1);
        auto on = csn::resolve_schedule(s2, 0.2, 0.99, 100);
        CHECK(on.s_tr == 1.5);
        CHECK(on.troll_target == 24);
        CHECK(on.s_cs == 3.0);
        CHECK(on.s_amp == 25.0);
        CHECK(on.amp_target == 24);
        CHECK(on.p_ref == 0.04);
        CHECK(on.reframe_topic == 24);
        CHECK(on.reframe_tier == 1);
        CHECK(on.shock_boost == 10.0);
        CHECK(on.shock_target == 24);
        CHECK(on.lambda_f == 0.2);  // untouched by multiplicative influences
    }
}

TEST_CASE("schedule validation rejects malformed entries")
{
    auto reject = [](std::vector<csn::InfluenceEntry> s) {
        CHECK_THROWS_AS(csn::validate_schedule(s, 500, 250, 3), csn::ConfigError);
    };
    reject({entry(csn::InfluenceKind::alignment, -1, 10, 0.8)});
    reject({entry(csn::InfluenceKind::alignment, 0, 501, 0.8)});
    reject({entry(csn::InfluenceKind::alignment, 200, 100, 0.8)});
    reject({entry(csn::InfluenceKind::alignment, 100, 100, 0.8)});
    reject({entry(csn::InfluenceKind::alignment, 0, 10, 0.0)});
    reject({entry(csn::InfluenceKind::alignment, 0, 10, -0.5)});
    reject({entry(csn::InfluenceKind::turnover, 0, 10, 1.5)});
    reject({entry(csn::InfluenceKind::reframing, 0, 10, 1.5, 5, 1)});
    reject({entry(csn::InfluenceKind::amplification, 0, 10, 25.0)});      // no topic
    reject({entry(csn::InfluenceKind::troll, 0, 10, 1.5, 250)});          // out of range
    reject({entry(csn::InfluenceKind::external_shock, 0, 10, 5.0, -1)});
    reject({entry(csn::InfluenceKind::reframing, 0, 10, 0.04, 5)});       // no tier
    reject({entry(csn::InfluenceKind::reframing, 0, 10, 0.04, 5, 3)});    // bad tier
    reject({entry(csn::InfluenceKind::troll, 0, 200, 1.5, 5),
            entry(csn::InfluenceKind::troll, 199, 300, 1.5, 6)});         // overlap

    SUBCASE("valid combinations pass")
    {
        // adjacent windows of one kind and overlapping distinct kinds are fine
        std::vector<csn::InfluenceEntry> ok{
            entry(csn::InfluenceKind::troll, 0, 200, 1.5, 5),
            entry(csn::InfluenceKind::troll, 200, 300, 2.0, 6),
            entry(csn::InfluenceKind::counterspeech, 100, 250, 3.0),
            entry(csn::InfluenceKind::alignment, 0, 500, 3.0),  // hypersensitive
        };
        CHECK_NOTHROW(csn::validate_schedule(ok, 500, 250, 3));
    }
}

TEST_CASE("amplified view boosts and renormalizes the perceived frequencies")
{
    std::vector<double> f{0.004, 0.5, 0.496};

    SUBCASE("neutral strength is the identity")
    {
        auto out = csn::amplified_frequencies(f, 1.0, 0);
        CHECK(out == f);
    }

    SUBCASE("boost 25 on a 0.004 topic yields the 0.0912 perceived share")
    {
        auto out = csn::amplified_frequencies(f, 25.0, 0);
        CHECK(out[0] == doctest::Approx(0.1 / 1.096).epsilon(1e-12));
        CHECK(out[0] == doctest::Approx(0.0912).epsilon(1e-3));
        CHECK(out[1] == doctest::Approx(0.5 / 1.096).epsilon(1e-12));
        double sum = out[0] + out[1] + out[2];
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("reframing replaces the target tier with the configured probability")
{
    SUBCASE("zero probability consumes no randomness")
    {
        auto news = batch_of(3, {0, 1, 2, 3, 4, 5});
        auto before = news.topics;
        csn::Stream a(42, 0, "reframe");
        csn::Stream b(42, 0, "reframe");
        csn::apply_reframing(news, 0.0, 9, 1, a);
        CHECK(news.topics == before);
        CHECK(a.next_u64() == b.next_u64());  // both streams still aligned
    }

    SUBCASE("probability one reframes every eligible item")
    {
        auto news = batch_of(3, {0, 1, 2, 3, 9, 5, 6, 7, 8});
        csn::Stream s(42, 0, "reframe");
        csn::apply_reframing(news, 1.0, 9, 1, s);
        CHECK(news.topic(0, 1) == 9);
        CHECK(news.topic(1, 1) == 9);  // item (3,9,5) already had 9: unchanged
        CHECK(news.topics[4] == 9);
        CHECK(news.topics[3] == 3);
        CHECK(news.topics[5] == 5);
        CHECK(news.topic(2, 1) == 9);
        CHECK(news.topic(2, 0) == 6);
        CHECK(news.topic(2, 2) == 8);
    }

    SUBCASE("item already containing the target in the swapped slot stays put")
    {
        auto news = batch_of(3, {9, 1, 2});
        csn::Stream s(1, 0, "reframe");
        csn::apply_reframing(news, 1.0, 9, 1, s);
        CHECK(news.topics == std::vector<std::int32_t>{9, 1, 2});
    }

    SUBCASE("replacement count follows the binomial law at p=0.04")
    {
        const int n_news = 250;
        const int steps = 400;
        double total = 0.0;
        int outliers = 0;
        csn::Stream s(7, 0, "reframe");
        for (int t = 0; t < steps; ++t) {
            std::vector<std::int32_t> topics(static_cast<std::size_t>(n_news) * 3);
            for (int i = 0; i < n_news; ++i)
                for (int q = 0; q < 3; ++q)
                    topics[static_cast<std::size_t>(i) * 3 + q] = (i * 3 + q) % 100;
            auto news = batch_of(3, topics);
            csn::apply_reframing(news, 0.04, 200, 1, s);
            int replaced = 0;
            for (int i = 0; i < n_news; ++i)
                if (news.topic(i, 1) == 200) ++replaced;
            if (replaced < 1 || replaced > 20) ++outliers;  // beyond ~3 sigma
            total += replaced;
        }
        // ~0.3 of 400 steps are expected beyond the 3-sigma band
        CHECK(outliers <= 4);
        double mean = total / steps;
        // SEM over 400 steps: sqrt(250*0.04*0.96/400) = 0.155; 4 sigma band
        CHECK(mean == doctest::Approx(10.0).epsilon(0.062));
    }
}

TEST_CASE("external shock re-ranks the general network and preserves the support")
{
    const int n = 12;
    csn::SemanticNetwork general;
    general.n_topics = n;
    general.frequency = csn::frequency_support(n, 1.0);
    general.weight.assign(static_cast<std::size_t>(n) * n, 0.25);
    auto support = general.frequency;

    SUBCASE("neutral boost is the identity")
    {
        auto out = csn::shocked_network(general, 1.0, 7, support);
        CHECK(out.frequency == general.frequency);
        CHECK(out.weight == general.weight);
    }

    SUBCASE("a strong boost promotes the target to rank one")
    {
        auto out = csn::shocked_network(general, 50.0, 7, support);
        CHECK(out.frequency[7] == support[0]);
        CHECK(out.frequency[0] == support[1]);  // everyone else shifts down one
        CHECK(out.frequency[6] == support[7]);
        CHECK(out.frequency[8] == support[8]);  // below the target: unchanged
        double sum = 0.0;
        for (double f : out.frequency) sum += f;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(out.weight == general.weight);  // weights untouched
    }

    SUBCASE("a mild boost moves the target up a bounded number of ranks")
    {
        // topic 7 holds rank 8 (f = support[7]); boost 3 lifts it between
        // rank 3 (0.333/C) and rank 2 (0.5/C): it lands at rank 3
        auto out = csn::shocked_network(general, 3.0, 7, support);
        CHECK(out.frequency[7] == support[2]);
        CHECK(out.frequency[0] == support[0]);
        CHECK(out.frequency[1] == support[1]);
        CHECK(out.frequency[2] == support[3]);  // pushed down one rank
        CHECK(out.frequency[6] == support[7]);
    }
}
