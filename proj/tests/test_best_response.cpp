#include "doctest.h"

#include <set>

#include "cmg/best_response.hpp"
#include "cmg/structure.hpp"
#include "test_util.hpp"

using cmg::Configuration;
using cmg::Rational;

TEST_CASE("best response on hand-checked instances") {
    auto p2 = cmg::new_game<Rational>(2, 1, Rational(1, 2), std::nullopt);
    auto brs = cmg::best_response_set(p2, Configuration(2, 1, {{1}, {0}}), 0);
    CHECK(brs.actions == std::vector<std::vector<int>>{{1}});
    CHECK(brs.min_value == Rational(4, 3));

    // 3-cycle: node 2 links to 0, so it is player 0's unique best response
    auto p3 = cmg::new_game<Rational>(3, 1, Rational(1, 2), std::nullopt);
    auto brs3 = cmg::best_response_set(p3, Configuration(3, 1, {{1}, {2}, {0}}), 0);
    CHECK(brs3.actions == std::vector<std::vector<int>>{{2}});
    CHECK(brs3.min_value == Rational(12, 7));
}

TEST_CASE("exact ties expand combinatorially") {
    // nobody links to node 0, so all candidates are tied
    auto p = cmg::new_game<Rational>(4, 1, Rational(1, 2), std::nullopt);
    Configuration config(4, 1, {{1}, {2}, {1}, {2}});
    auto brs = cmg::best_response_set(p, config, 0);
    CHECK(brs.actions == std::vector<std::vector<int>>{{1}, {2}, {3}});

    auto pm2 = cmg::new_game<Rational>(5, 2, Rational(17, 20), std::nullopt);
    Configuration iso(5, 2, {{1, 2}, {0, 2}, {0, 1}, {1, 2}, {1, 2}});
    auto brs2 = cmg::best_response_set(pm2, iso, 3);  // nobody links to node 3
    CHECK(brs2.actions.size() == 6);  // C(4,2)
    CHECK(brs2.actions.front() == std::vector<int>{0, 1});
    CHECK(brs2.actions.back() == std::vector<int>{2, 4});
}

TEST_CASE("float backend clusters near-ties like the exact backend") {
    auto pq = cmg::new_game<Rational>(4, 1, Rational(1, 2), std::nullopt);
    auto pd = cmg::new_game<double>(4, 1, 0.5, std::nullopt);
    Configuration config(4, 1, {{1}, {2}, {1}, {2}});
    auto exact = cmg::best_response_set(pq, config, 0);
    auto approx = cmg::best_response_set(pd, config, 0);
    CHECK(exact.actions == approx.actions);
}

TEST_CASE("best response maximizes utility over the full action space") {
    // Independent check: swap in every alternative action and compare the
    // resulting utility directly.
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + static_cast<int>(rng() % 4);
        int m = 1 + static_cast<int>(rng() % 2);
        if (n <= m) continue;
        auto eta = cmgtest::random_eta(n, rng);
        auto p = cmg::new_game<Rational>(n, m, cmgtest::beta_sweep()[iter % 4], eta);
        auto config = cmgtest::random_config(n, m, rng);
        int s = static_cast<int>(rng() % n);

        auto brs = cmg::best_response_set(p, config, s);
        Rational best_u(-1);
        std::vector<int> pool;
        for (int v = 0; v < n; ++v)
            if (v != s) pool.push_back(v);
        std::vector<std::vector<int>> candidates;
        cmg::detail::combinations(pool, m, {}, candidates);
        for (const auto& action : candidates) {
            Rational u = cmg::utility(p, config.with_action(s, action), s);
            if (u > best_u) best_u = u;
        }
        for (const auto& action : candidates) {
            Rational u = cmg::utility(p, config.with_action(s, action), s);
            CHECK(cmg::action_in_set(brs, action) == (u == best_u));
        }
    }
}

TEST_CASE("m=1 structural best response equals the argmin computation") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 3 + static_cast<int>(rng() % 6);  // n <= 8
        auto eta = cmgtest::random_eta(n, rng);
        auto p = cmg::new_game<Rational>(n, 1, cmgtest::beta_sweep()[iter % 4], eta);
        auto config = cmgtest::random_config(n, 1, rng);
        int s = static_cast<int>(rng() % n);
        auto brs = cmg::best_response_set(p, config, s);
        CHECK(brs.actions == cmg::structural_best_response_m1(config, s));
    }
}

TEST_CASE("m=2 structural support contains the best response set") {
    std::mt19937_64 rng(41);
    int exact_checked = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 4 + static_cast<int>(rng() % 5);  // n <= 8
        auto eta = cmgtest::random_eta(n, rng);
        auto p = cmg::new_game<Rational>(n, 2, cmgtest::beta_sweep()[iter % 4], eta);
        auto config = cmgtest::random_config(n, 2, rng);
        int s = static_cast<int>(rng() % n);

        auto brs = cmg::best_response_set(p, config, s);
        auto support = cmg::structural_br_support_m2(config, s);
        for (const auto& action : brs.actions)
            CHECK(support.contains(action[0], action[1]));
        if (support.exact) {
            // the support is itself the best response set
            CHECK(brs.actions.size() == support.pairs.size());
            for (const auto& [v, w] : support.pairs)
                CHECK(cmg::action_in_set(brs, std::vector<int>{v, w}));
            ++exact_checked;
        }
    }
    CHECK(exact_checked > 0);
}

TEST_CASE("min_value is the mean of the m smallest hitting times") {
    auto p = cmg::new_game<Rational>(5, 2, Rational(1, 2), std::nullopt);
    Configuration config = cmg::butterfly_configuration();
    for (int s = 0; s < 5; ++s) {
        auto ht = cmg::hitting_times(p, config, s);
        std::vector<Rational> taus;
        for (int i = 0; i < 5; ++i)
            if (i != s) taus.push_back(ht.tau[i]);
        std::sort(taus.begin(), taus.end());
        auto brs = cmg::best_response_set(p, config, s);
        CHECK(brs.min_value == (taus[0] + taus[1]) / Rational(2));
    }
}

TEST_CASE("actions come out sorted, unique and lexicographic") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 4 + static_cast<int>(rng() % 4);
        int m = 1 + static_cast<int>(rng() % 2);
        auto p = cmg::new_game<Rational>(n, m, Rational(1, 2), std::nullopt);
        auto config = cmgtest::random_config(n, m, rng);
        auto brs = cmg::best_response_set(p, config, static_cast<int>(rng() % n));
        std::set<std::vector<int>> seen(brs.actions.begin(), brs.actions.end());
        CHECK(seen.size() == brs.actions.size());
        CHECK(std::is_sorted(brs.actions.begin(), brs.actions.end()));
        for (const auto& a : brs.actions) CHECK(std::is_sorted(a.begin(), a.end()));
    }
}
