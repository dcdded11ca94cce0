#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "csnsim/rng.hpp"
#include "csnsim/semantic_network.hpp"
#include "statutil.hpp"

using namespace csn;

namespace {

double harmonic(int n)
{
    double h = 0.0;
    for (int k = 1; k <= n; ++k)
        h += 1.0 / k;
    return h;
}

} // namespace

TEST_CASE("frequency support is the normalized power ladder")
{
    auto s = frequency_support(250, 1.0);
    REQUIRE(s.size() == 250);
    double h = harmonic(250);
    CHECK(h == doctest::Approx(6.10068).epsilon(1e-5));
    CHECK(s[0] == doctest::Approx(1.0 / h).epsilon(1e-12));
    CHECK(s[0] == doctest::Approx(0.16392).epsilon(1e-4));
    CHECK(std::accumulate(s.begin(), s.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::is_sorted(s.rbegin(), s.rend()));
    for (int k = 0; k < 249; ++k)
        CHECK(s[k] > s[k + 1]);
}

TEST_CASE("normalized ranks order by value with index tie-break")
{
    std::vector<double> f{0.1, 0.4, 0.3, 0.2};
    auto t = normalized_ranks(f);
    CHECK(t.r == std::vector<double>{1.0, 0.25, 0.5, 0.75});
    CHECK(t.rank_of(1) == 1);
    CHECK(t.rank_of(0) == 4);

    std::vector<double> tie{0.3, 0.4, 0.3};
    auto tt = normalized_ranks(tie);
    CHECK(tt.r[1] == doctest::Approx(1.0 / 3.0));
    CHECK(tt.r[0] == doctest::Approx(2.0 / 3.0));   // earlier index wins the tie
    CHECK(tt.r[2] == doctest::Approx(1.0));
}

TEST_CASE("rank quantization maps values onto the support multiset")
{
    auto support = frequency_support(5, 1.0);
    std::vector<double> v{0.05, 0.5, 0.2, 0.15, 0.1};
    rank_quantize(v, support);
    CHECK(v[1] == support[0]);
    CHECK(v[2] == support[1]);
    CHECK(v[3] == support[2]);
    CHECK(v[4] == support[3]);
    CHECK(v[0] == support[4]);

    // Ties resolved by the provided key
    std::vector<double> tied{0.25, 0.25, 0.2, 0.2, 0.1};
    std::vector<int> key{2, 1, 3, 4, 5};
    rank_quantize(tied, support, key);
    CHECK(tied[1] == support[0]);
    CHECK(tied[0] == support[1]);
}

TEST_CASE("general network init: exact frequencies, clamped log-normal weights")
{
    Stream s(100, 0, "init");
    InitParams p;
    auto net = init_general_network(250, p, s);
    auto support = frequency_support(250, 1.0);
    CHECK(net.frequency == support);

    std::vector<double> ws;
    for (int i = 0; i < 250; ++i) {
        CHECK(net.w(i, i) == 0.0);
        for (int j = i + 1; j < 250; ++j) {
            double w = net.w(i, j);
            CHECK(w == net.w(j, i));
            CHECK(w >= 0.0);
            CHECK(w <= 1.0);
            ws.push_back(w);
        }
    }
    REQUIRE(ws.size() == 250u * 249u / 2u);
    CHECK(testutil::sample_median(ws) == doctest::Approx(0.35).epsilon(0.015));
}

TEST_CASE("community init: equilibrium start copies the general network")
{
    Stream s(101, 0, "init");
    InitParams p;
    auto gen = init_general_network(50, p, s);
    Stream cs(101, 0, "community");
    auto com = init_community_network(gen, p, cs);
    CHECK(com.frequency == gen.frequency);
    CHECK(com.weight == gen.weight);
}

TEST_CASE("community init: perturbed start stays on the support")
{
    Stream s(102, 0, "init");
    InitParams p;
    p.sigma_fp = 1.0;
    p.sigma_wp = 0.05;
    auto gen = init_general_network(100, p, s);
    Stream cs(102, 0, "community");
    auto com = init_community_network(gen, p, cs);

    auto support = frequency_support(100, 1.0);
    auto sorted_freq = com.frequency;
    std::sort(sorted_freq.rbegin(), sorted_freq.rend());
    for (int i = 0; i < 100; ++i)
        CHECK(sorted_freq[i] == doctest::Approx(support[i]).epsilon(1e-12));

    CHECK(com.frequency != gen.frequency);   // actually shuffled
    int moved = 0;
    for (std::size_t i = 0; i < com.weight.size(); ++i) {
        CHECK(com.weight[i] >= 0.0);
        CHECK(com.weight[i] <= 1.0);
        moved += (com.weight[i] != gen.weight[i]);
    }
    CHECK(moved > 0);

    // Deterministic under the same stream triple
    Stream cs2(102, 0, "community");
    auto com2 = init_community_network(gen, p, cs2);
    CHECK(com2.frequency == com.frequency);
    CHECK(com2.weight == com.weight);
}

TEST_CASE("network tables serialize as flat 1-based CSV")
{
    SemanticNetwork net;
    net.n_topics = 3;
    net.frequency = {0.5, 0.3, 0.2};
    net.weight.assign(9, 0.0);
    net.set_w(0, 1, 0.25);
    net.set_w(0, 2, 0.5);
    net.set_w(1, 2, 0.125);

    std::ostringstream f;
    write_frequency_table(net, f);
    CHECK(f.str()
          == "topic_id,frequency\n1,0.5\n2,0.29999999999999999\n"
             "3,0.20000000000000001\n");

    std::ostringstream w;
    write_weight_table(net, w);
    CHECK(w.str() == "i,j,weight\n1,2,0.25\n1,3,0.5\n2,3,0.125\n");
}
