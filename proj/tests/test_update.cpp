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
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"
#include "csnsim/update.hpp"

namespace {

csn::SemanticNetwork uniform_net(int n, double w)
{
    csn::SemanticNetwork net;
    net.n_topics = n;
    net.frequency = csn::frequency_support(n, 1.0);
    net.weight.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) net.set_w(i, j, w);
    return net;
}

csn::CommentNetwork single_pair_comments(int n, int a, int b, double mass)
{
    csn::CommentNetwork c;
    c.n_topics = n;
    c.topic_mass.assign(static_cast<std::size_t>(n), 0.0);
    c.pair_mass.assign(static_cast<std::size_t>(n) * n, 0.0);
    c.pair_mass[static_cast<std::size_t>(a) * n + b] = mass;
    c.pair_mass[static_cast<std::size_t>(b) * n + a] = mass;
    c.active_pairs = {{a, b}};
    c.pair_total = mass;
    return c;
}

double weight_sum(const csn::SemanticNetwork& net)
{
    double s = 0.0;
    for (int i = 0; i < net.n_topics; ++i)
        for (int j = i + 1; j < net.n_topics; ++j) s += net.w(i, j);
    return s;
}

} // namespace

TEST_CASE("frequency update blends comment shares and re-quantizes onto the support")
{
    const int n = 4;
    auto support = csn::frequency_support(n, 1.0);
    csn::SemanticNetwork net;
    net.n_topics = n;
    net.frequency = support;  // topic i holds rank i+1

    SUBCASE("full memory keeps the frequencies")
    {
        auto before = net.frequency;
        std::vector<double> mass{0.0, 0.0, 0.5, 0.5};
        csn::update_frequencies(net, mass, 1.0, support);
        CHECK(net.frequency == before);
    }

    SUBCASE("no memory adopts the comment-share ranking")
    {
        std::vector<double> mass{0.1, 0.2, 0.3, 0.4};  // reversed popularity
        csn::update_frequencies(net, mass, 0.0, support);
        CHECK(net.frequency[0] == support[3]);
        CHECK(net.frequency[1] == support[2]);
        CHECK(net.frequency[2] == support[1]);
        CHECK(net.frequency[3] == support[0]);
    }

    SUBCASE("a ranking-preserving blend is a fixed point")
    {
        std::vector<double> mass{0.4, 0.3, 0.2, 0.1};  // same order as f
        auto before = net.frequency;
        csn::update_frequencies(net, mass, 0.5, support);
        CHECK(net.frequency == before);
    }

    SUBCASE("tied proxies keep the previous ranking")
    {
        // equal comment mass everywhere with no memory: all proxies tie, so
        // the old ranking must survive
        std::vector<double> mass{2.5, 2.5, 2.5, 2.5};
        auto before = net.frequency;
        csn::update_frequencies(net, mass, 0.0, support);
        CHECK(net.frequency == before);
    }

    SUBCASE("a partial blend can swap adjacent ranks only when shares demand it")
    {
        // topic 2 outcomments topic 1 enough to pass it at lambda_m = 0.5
        std::vector<double> mass{0.5, 0.05, 0.45, 0.0};
        csn::update_frequencies(net, mass, 0.5, support);
        CHECK(net.frequency[0] == support[0]);
        CHECK(net.frequency[1] == support[2]);
        CHECK(net.frequency[2] == support[1]);
        CHECK(net.frequency[3] == support[3]);
    }

    SUBCASE("zero total comment mass is rejected")
    {
        std::vector<double> mass{0.0, 0.0, 0.0, 0.0};
        CHECK_THROWS_AS(csn::update_frequencies(net, mass, 0.5, support),
                        csn::RuntimeError);
    }
}

TEST_CASE("weight update reproduces the hand-computed single-pair case")
{
    // one reinforced pair at w=0.4 whose pair share equals the whole step
    // (mass/D = 1), eta=10, w_max=0.8, prior total weight 100:
    // gain = 10*(0.8-0.4)*1 = 4, decay rate = 4/100, so the pair lands at
    // clamp(0.4 + 4 - 0.04*0.4) = 0.8 and every idle weight shrinks by 4%.
    const int n = 24;  // 276 pairs keep the idle weights below the cap
    csn::SemanticNetwork net = uniform_net(n, 0.0);
    net.set_w(0, 1, 0.4);
    const double rest = (100.0 - 0.4) / 275.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 0 && j == 1)) net.set_w(i, j, rest);
    REQUIRE(weight_sum(net) == doctest::Approx(100.0).epsilon(1e-12));

    auto comments = single_pair_comments(n, 0, 1, 2.5);
    csn::UpdateParams p;
    p.sigma_wn = 0.0;
    csn::Stream s(1, 0, "noise");
    csn::UpdateScratch scratch;
    csn::update_weights(net, comments, p, s, scratch);

    CHECK(net.w(0, 1) == 0.8);  // clamped from 4.384
    CHECK(net.w(1, 0) == 0.8);
    CHECK(net.w(2, 3) == doctest::Approx(rest * (1.0 - 0.04)).epsilon(1e-12));
    CHECK(net.w(7, 11) == doctest::Approx(rest * 0.96).epsilon(1e-12));
}

TEST_CASE("weight update without signal or noise is the identity")
{
    auto net = uniform_net(8, 0.3);
    auto before = net.weight;
    csn::CommentNetwork comments;
    comments.n_topics = 8;
    comments.topic_mass.assign(8, 0.0);
    comments.pair_mass.assign(64, 0.0);
    comments.pair_total = 0.0;
    csn::UpdateParams p;
    p.sigma_wn = 0.0;
    csn::Stream s(2, 0, "noise");
    csn::UpdateScratch scratch;
    csn::update_weights(net, comments, p, s, scratch);
    CHECK(net.weight == before);
}

TEST_CASE("total weight is conserved whenever no clamp binds")
{
    const int n = 12;
    csn::SemanticNetwork net = uniform_net(n, 0.0);
    csn::Stream init(3, 0, "w");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            net.set_w(i, j, 0.3 + 0.2 * csn::uniform01(init));  // in [0.3, 0.5]

    // small reinforcement spread over a few pairs keeps everything interior
    csn::CommentNetwork comments = single_pair_comments(n, 0, 1, 1.0);
    comments.pair_mass[static_cast<std::size_t>(2) * n + 3] = 1.0;
    comments.pair_mass[static_cast<std::size_t>(3) * n + 2] = 1.0;
    comments.pair_total = 2.0;

    csn::UpdateParams p;
    p.eta = 0.05;
    p.sigma_wn = 1e-4;
    const double before = weight_sum(net);
    csn::Stream s(3, 0, "noise");
    csn::UpdateScratch scratch;
    csn::update_weights(net, comments, p, s, scratch);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            REQUIRE(net.w(i, j) > 0.0);
            REQUIRE(net.w(i, j) < p.w_max);
        }
    CHECK(weight_sum(net) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("weights stay inside the cap under violent reinforcement")
{
    const int n = 10;
    auto net = uniform_net(n, 0.75);
    csn::CommentNetwork comments = single_pair_comments(n, 0, 1, 5.0);
    comments.pair_mass[static_cast<std::size_t>(4) * n + 9] = 5.0;
    comments.pair_mass[static_cast<std::size_t>(9) * n + 4] = 5.0;
    comments.pair_total = 10.0;
    csn::UpdateParams p;
    p.eta = 500.0;
    p.sigma_wn = 0.05;
    csn::Stream s(4, 0, "noise");
    csn::UpdateScratch scratch;
    csn::update_weights(net, comments, p, s, scratch);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CHECK(net.w(i, j) >= 0.0);
            CHECK(net.w(i, j) <= p.w_max);
            CHECK(net.w(i, j) == net.w(j, i));
        }
}

TEST_CASE("an empty weight network never decays (zero denominator)")
{
    const int n = 6;
    auto net = uniform_net(n, 0.0);
    csn::CommentNetwork comments = single_pair_comments(n, 1, 2, 3.0);
    csn::UpdateParams p;
    p.sigma_wn = 0.0;
    csn::Stream s(5, 0, "noise");
    csn::UpdateScratch scratch;
    csn::update_weights(net, comments, p, s, scratch);
    // gain = eta*(w_max-0)*1 = 8, decay rate forced to 0, clamped to the cap
    CHECK(net.w(1, 2) == doctest::Approx(0.8));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(i == 1 && j == 2)) CHECK(net.w(i, j) == 0.0);
}

TEST_CASE("noise is drawn once per pair and mirrored")
{
    const int n = 20;
    auto net = uniform_net(n, 0.4);
    csn::CommentNetwork comments;
    comments.n_topics = n;
    comments.topic_mass.assign(static_cast<std::size_t>(n), 0.0);
    comments.pair_mass.assign(static_cast<std::size_t>(n) * n, 0.0);
    comments.pair_total = 0.0;
    csn::UpdateParams p;  // only noise acts
    csn::Stream s(6, 0, "noise");
    csn::UpdateScratch scratch;
    csn::update_weights(net, comments, p, s, scratch);

    int distinct = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            CHECK(net.w(i, j) == net.w(j, i));
            if (net.w(i, j) != 0.4) ++distinct;
        }
    CHECK(distinct > 150);  // nearly every pair was perturbed

    SUBCASE("the same stream state reproduces the same noise")
    {
        auto net2 = uniform_net(n, 0.4);
        csn::Stream s2(6, 0, "noise");
        csn::update_weights(net2, comments, p, s2, scratch);
        CHECK(net2.weight == net.weight);
    }
}

TEST_CASE("the replacing update form discards the carried weight")
{
    const int n = 6;
    auto net_inc = uniform_net(n, 0.5);
    auto net_lit = uniform_net(n, 0.5);
    csn::CommentNetwork comments = single_pair_comments(n, 0, 1, 1.0);
    csn::UpdateParams p;
    p.sigma_wn = 0.0;
    p.eta = 1.0;
    csn::UpdateScratch scratch;
    csn::Stream s1(7, 0, "noise");
    csn::update_weights(net_inc, comments, p, s1, scratch);

    p.literal_hebbian = true;
    csn::Stream s2(7, 0, "noise");
    csn::update_weights(net_lit, comments, p, s2, scratch);

    // incremental: w + gain - gamma*w ; replacing: gain - gamma*w
    const double gain = 1.0 * (0.8 - 0.5) * 1.0;
    const double gamma = gain / (15.0 * 0.5);
    CHECK(net_inc.w(0, 1) ==
          doctest::Approx(0.5 + gain - gamma * 0.5).epsilon(1e-12));
    CHECK(net_lit.w(0, 1) ==
          doctest::Approx(gain - gamma * 0.5).epsilon(1e-12));
    CHECK(net_lit.w(2, 3) == 0.0);  // clamp(-gamma*w) floors at zero
}
