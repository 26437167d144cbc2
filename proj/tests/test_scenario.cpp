#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bellgate/scenario.hpp"

using namespace bellgate;

TEST_CASE("strategy counts") {
    CHECK(strategy_count({2, 2, 2}) == 81);          // 3^4
    CHECK(strategy_count({3, 2, 3}) == 1024);        // 4^5
    CHECK(strategy_count({4, 3, 3}) == 15625);       // 5^6
    CHECK_THROWS_AS(strategy_count({9, 4, 4}), CapExceeded);
}

TEST_CASE("enumeration is lexicographic and duplicate-free") {
    const Scenario s{2, 2, 2};
    const auto all = enumerate_strategies(s);
    REQUIRE(all.size() == 81);
    std::set<std::vector<int>> seen;
    for (std::uint64_t k = 0; k < all.size(); ++k) {
        std::vector<int> flat = all[k].alice;
        flat.insert(flat.end(), all[k].bob.begin(), all[k].bob.end());
        CHECK(seen.insert(flat).second);
        CHECK(strategy_index(s, all[k]) == k);
    }
    // first and last in lexicographic order
    CHECK(all.front().alice == std::vector<int>{0, 0});
    CHECK(all.front().bob == std::vector<int>{0, 0});
    CHECK(all.back().alice == std::vector<int>{2, 2});
    CHECK(all.back().bob == std::vector<int>{2, 2});
}

TEST_CASE("lexicographic order for several scenarios under 1e5") {
    for (const Scenario s : {Scenario{2, 2, 2}, Scenario{3, 2, 3}, Scenario{2, 3, 3},
                             Scenario{4, 2, 2}, Scenario{3, 3, 3}}) {
        const auto n = strategy_count(s, 100000);
        DeterministicStrategy prev;
        for (std::uint64_t k = 0; k < n; ++k) {
            const auto st = strategy_from_index(s, k);
            if (k > 0) {
                std::vector<int> a = prev.alice, b = st.alice;
                a.insert(a.end(), prev.bob.begin(), prev.bob.end());
                b.insert(b.end(), st.bob.begin(), st.bob.end());
                CHECK(a < b);
            }
            prev = st;
        }
    }
}

TEST_CASE("strategy_point definition and normalization") {
    const Scenario s1{2, 1, 1};
    const auto t = strategy_point(s1, {{0}, {1}});
    CHECK(t.at(0, 0, 0, 1) == 1.0);
    double sum = 0.0;
    for (double v : t.p) sum += v;
    CHECK(sum == 1.0);

    const Scenario s2{2, 2, 2};
    const auto te = strategy_point(s2, {{2, 2}, {2, 2}});
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(te.at(i, j, 2, 2) == 1.0);
}

TEST_CASE("strategy points satisfy no-signalling exactly") {
    const Scenario s{3, 2, 3};
    for (std::uint64_t k = 0; k < strategy_count(s); k += 7) {
        const auto t = strategy_point(s, strategy_from_index(s, k));
        CHECK_NOTHROW(t.validate(0.0));
    }
}

TEST_CASE("table validation catches broken tables") {
    const Scenario s{2, 2, 2};
    CorrelationTable t = strategy_point(s, {{0, 0}, {0, 0}});
    t.at(0, 0, 0, 0) = 0.5;  // break normalization
    CHECK_THROWS_AS(t.validate(1e-9), ValidationError);
}
