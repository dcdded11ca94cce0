#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "csnsim/events.hpp"
#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"

using namespace csn;

TEST_CASE("base event distribution is proportional to -ln(rank)")
{
    std::vector<double> f{0.4, 0.3, 0.2, 0.1};
    auto ranks = normalized_ranks(f);
    auto p = base_event_distribution(ranks);
    double s = -std::log(0.25) - std::log(0.5) - std::log(0.75);
    CHECK(p[0] == doctest::Approx(-std::log(0.25) / s));
    CHECK(p[1] == doctest::Approx(-std::log(0.5) / s));
    CHECK(p[2] == doctest::Approx(-std::log(0.75) / s));
    CHECK(p[3] == 0.0);   // rank-N topic is never sampled
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
}

TEST_CASE("distribution evolution mixes a fresh histogram with the past")
{
    auto support = frequency_support(50, 1.0);
    auto ranks = normalized_ranks(support);
    auto base = base_event_distribution(ranks);

    SUBCASE("lambda_e = 1 keeps the previous distribution")
    {
        Stream s(1, 0, "events");
        std::vector<double> prev(50, 1.0 / 50.0);
        auto out = evolve_event_distribution(prev, ranks, 1.0, 1000, s);
        CHECK(out == prev);
    }

    SUBCASE("lambda_e = 0 is a pure empirical histogram")
    {
        Stream s(2, 0, "events");
        auto out = evolve_event_distribution(base, ranks, 0.0, 3000, s);
        CHECK(std::accumulate(out.begin(), out.end(), 0.0) == doctest::Approx(1.0));
        for (double v : out) {
            double grain = v * 3000.0;
            CHECK(grain == doctest::Approx(std::round(grain)).epsilon(1e-9));
        }
    }

    SUBCASE("large draw counts concentrate on the base distribution")
    {
        Stream s(3, 0, "events");
        auto out = evolve_event_distribution(base, ranks, 0.5, 200000, s);
        for (int i = 0; i < 50; ++i)
            CHECK(out[i] == doctest::Approx(base[i]).epsilon(0.08).scale(0.01));
    }
}

TEST_CASE("events have distinct tier topics with exclusion sampling law")
{
    std::vector<double> dist{0.5, 0.3, 0.2};
    Stream s(4, 0, "events");
    const int n_events = 100000;
    auto batch = generate_events(dist, n_events, 2, s);
    REQUIRE(batch.size() == n_events);

    int count01 = 0, count10 = 0, first0 = 0;
    for (int e = 0; e < n_events; ++e) {
        CHECK(batch.topic(e, 0) != batch.topic(e, 1));
        first0 += (batch.topic(e, 0) == 0);
        count01 += (batch.topic(e, 0) == 0 && batch.topic(e, 1) == 1);
        count10 += (batch.topic(e, 0) == 1 && batch.topic(e, 1) == 0);
    }
    // Tier 1 follows the raw distribution; tier 2 is renormalized without
    // the tier-1 topic: P(0 then 1) = 0.5*0.3/0.5, P(1 then 0) = 0.3*0.5/0.7.
    CHECK(first0 / double(n_events) == doctest::Approx(0.5).epsilon(0.02));
    CHECK(count01 / double(n_events) == doctest::Approx(0.30).epsilon(0.03));
    CHECK(count10 / double(n_events) == doctest::Approx(0.3 * 0.5 / 0.7).epsilon(0.03));
}

TEST_CASE("degenerate distributions still produce distinct tiers")
{
    // One dominant topic forces the rejection fallback path.
    std::vector<double> dist{0.9999999, 0.00000005, 0.00000005};
    Stream s(5, 0, "events");
    auto batch = generate_events(dist, 2000, 2, s);
    for (int e = 0; e < batch.size(); ++e)
        CHECK(batch.topic(e, 0) != batch.topic(e, 1));
}

TEST_CASE("three-tier events from the full model-sized distribution")
{
    auto support = frequency_support(250, 1.0);
    auto ranks = normalized_ranks(support);
    auto dist = base_event_distribution(ranks);
    Stream s(6, 0, "events");
    auto batch = generate_events(dist, 1000, 3, s);
    REQUIRE(batch.size() == 1000);
    for (int e = 0; e < 1000; ++e) {
        auto a = batch.topic(e, 0), b = batch.topic(e, 1), c = batch.topic(e, 2);
        CHECK(a != b);
        CHECK(a != c);
        CHECK(b != c);
        CHECK(a != 249);   // zero-probability rank-N topic
        CHECK(b != 249);
        CHECK(c != 249);
    }
}
