#include "doctest.h"

#include <cmath>

#include "cmg/centrality.hpp"
#include "test_util.hpp"

using cmg::Configuration;
using cmg::Rational;

namespace {

Rational l1_gap(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    return acc;
}

}  // namespace

TEST_CASE("bonacich centrality: symmetric cases") {
    for (const Rational& beta : cmgtest::beta_sweep()) {
        auto p2 = cmg::new_game<Rational>(2, 1, beta, std::nullopt);
        auto pi2 = cmg::bonacich_direct(p2, Configuration(2, 1, {{1}, {0}}));
        CHECK(pi2 == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

        auto p3 = cmg::new_game<Rational>(3, 1, beta, std::nullopt);
        auto pi3 = cmg::bonacich_direct(p3, Configuration(3, 1, {{1}, {2}, {0}}));
        CHECK(pi3 == std::vector<Rational>(3, Rational(1, 3)));
    }
}

TEST_CASE("bonacich centrality: asymmetric case against power series oracle") {
    // 2-clique {0,1} plus node 2 linking into it
    auto p = cmg::new_game<Rational>(3, 1, Rational(1, 2), std::nullopt);
    Configuration config(3, 1, {{1}, {0}, {0}});
    auto pi = cmg::bonacich_direct(p, config);
    CHECK(pi[0] > pi[1]);
    CHECK(pi[1] > pi[2]);
    CHECK(pi[0] + pi[1] + pi[2] == Rational(1));

    auto series = cmg::bonacich_power_series(p, config, 200);
    Rational tol = Rational(1) / boost::multiprecision::pow(cmg::BigInt(2), 190);
    CHECK(l1_gap(pi, series) < tol);
}

TEST_CASE("power series basics") {
    auto p = cmg::new_game<Rational>(2, 1, Rational(1, 2), std::nullopt);
    Configuration mutual(2, 1, {{1}, {0}});
    auto k0 = cmg::bonacich_power_series(p, mutual, 0);
    CHECK(k0 == std::vector<Rational>{Rational(1, 4), Rational(1, 4)});  // (1-beta) eta

    auto k40 = cmg::bonacich_power_series(p, mutual, 40);
    auto direct = cmg::bonacich_direct(p, mutual);
    Rational bound(1, boost::multiprecision::pow(cmg::BigInt(2), 41));
    CHECK(l1_gap(k40, direct) <= bound);
}

TEST_CASE("power series truncation bound holds for every K") {
    std::mt19937_64 rng(5);
    auto p = cmg::new_game<Rational>(6, 2, Rational(1, 2), std::nullopt);
    auto config = cmgtest::random_config(6, 2, rng);
    auto direct = cmg::bonacich_direct(p, config);
    for (int k = 0; k <= 30; k += 3) {
        auto series = cmg::bonacich_power_series(p, config, k);
        Rational bound = Rational(2, 1) / Rational(boost::multiprecision::pow(cmg::BigInt(2), k + 1));
        CHECK(l1_gap(direct, series) <= bound);
    }
}

TEST_CASE("hitting times: hand-solved instances") {
    auto p2 = cmg::new_game<Rational>(2, 1, Rational(1, 2), std::nullopt);
    auto ht = cmg::hitting_times(p2, Configuration(2, 1, {{1}, {0}}), 0);
    CHECK(ht.tau[0] == Rational(0));
    CHECK(ht.tau[1] == Rational(4, 3));

    // 3-cycle, s = 0: node 2 links directly to 0 and is closer
    auto p3 = cmg::new_game<Rational>(3, 1, Rational(1, 2), std::nullopt);
    auto ht3 = cmg::hitting_times(p3, Configuration(3, 1, {{1}, {2}, {0}}), 0);
    CHECK(ht3.tau[1] == Rational(18, 7));
    CHECK(ht3.tau[2] == Rational(12, 7));
    CHECK(ht3.tau[2] < ht3.tau[1]);
}

TEST_CASE("empty in-neighborhood: hitting times collapse to the closed form") {
    // node 0 receives no links
    auto p = cmg::new_game<Rational>(4, 1, Rational(17, 20), std::nullopt);
    Configuration config(4, 1, {{1}, {2}, {1}, {2}});
    auto ht = cmg::hitting_times(p, config, 0);
    Rational expected = Rational(1) / ((Rational(1) - p.beta) * p.eta[0]);
    for (int i = 1; i < 4; ++i) CHECK(ht.tau[i] == expected);
}

TEST_CASE("utility equals centrality (hitting time identity)") {
    auto p2 = cmg::new_game<Rational>(2, 1, Rational(1, 2), std::nullopt);
    Configuration mutual(2, 1, {{1}, {0}});
    CHECK(cmg::utility(p2, mutual, 0) == Rational(1, 2));

    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + static_cast<int>(rng() % 5);
        int m = 1 + static_cast<int>(rng() % 2);
        auto eta = cmgtest::random_eta(n, rng);
        auto p = cmg::new_game<Rational>(n, m, Rational(17, 20), eta);
        auto config = cmgtest::random_config(n, m, rng);
        auto pi = cmg::bonacich_direct(p, config);
        Rational total(0);
        for (int s = 0; s < n; ++s) {
            Rational u = cmg::utility(p, config, s);
            CHECK(u == pi[s]);
            total += u;
        }
        CHECK(total == Rational(1));
    }
}

TEST_CASE("hitting time bounds: property sweep") {
    std::mt19937_64 rng(17);
    const std::vector<Rational> betas = {Rational(1, 10), Rational(1, 2), Rational(9, 10)};
    int checked = 0;
    for (int iter = 0; iter < 500; ++iter) {
        int n = 4 + static_cast<int>(rng() % 5);
        int m = 1 + static_cast<int>(rng() % 2);
        auto eta = cmgtest::random_eta(n, rng);
        auto p = cmg::new_game<Rational>(n, m, betas[iter % betas.size()], eta);
        auto config = cmgtest::random_config(n, m, rng);
        int s = static_cast<int>(rng() % n);
        auto report = cmg::check_hitting_bounds(p, config, s);
        CHECK(report.ok);
        ++checked;
    }
    CHECK(checked == 500);
}

TEST_CASE("bound equality cases") {
    // empty in-neighborhood: global bound tight at every node
    auto p = cmg::new_game<Rational>(4, 1, Rational(1, 2), std::nullopt);
    Configuration config(4, 1, {{1}, {2}, {1}, {2}});
    auto report = cmg::check_hitting_bounds(p, config, 0);
    CHECK(report.ok);
    CHECK(report.global_bound_tight);

    // |N^-2_s| = 1 at m=2: tau values sit exactly at T1 and T2
    auto p2 = cmg::new_game<Rational>(5, 2, Rational(1, 2), std::nullopt);
    Configuration c2(5, 2, {{1, 2}, {0, 2}, {3, 4}, {2, 4}, {2, 3}});
    // node 0's only in-link is from node 1, and node 1 has no other in-links
    REQUIRE(cmg::in_neighborhood2(c2, 0) == std::vector<int>{1});
    auto ht = cmg::hitting_times(p2, c2, 0);
    Rational denom = p2.eta[0] + p2.beta / 2 * p2.eta[1];
    Rational t2 = Rational(1) / ((Rational(1) - p2.beta) * denom);
    Rational t1 = (Rational(1) - p2.beta / 2) * t2;
    CHECK(ht.tau[1] == t1);
    for (int i = 2; i < 5; ++i) CHECK(ht.tau[i] == t2);
}

TEST_CASE("rational and float backends agree") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 3 + static_cast<int>(rng() % 8);
        int m = 1 + static_cast<int>(rng() % 2);
        auto eta_q = cmgtest::random_eta(n, rng);
        auto pq = cmg::new_game<Rational>(n, m, Rational(17, 20), eta_q);
        auto pd = cmg::new_game<double>(n, m, 0.85, cmgtest::to_doubles(eta_q));
        auto config = cmgtest::random_config(n, m, rng);

        auto pi_q = cmg::bonacich_direct(pq, config);
        auto pi_d = cmg::bonacich_direct(pd, config);
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(pi_d[i] - static_cast<double>(pi_q[i])) <=
                  1e-9 * static_cast<double>(pi_q[i]));

        int s = static_cast<int>(rng() % n);
        auto ht_q = cmg::hitting_times(pq, config, s);
        auto ht_d = cmg::hitting_times(pd, config, s);
        for (int i = 0; i < n; ++i) {
            if (i == s) continue;
            CHECK(std::abs(ht_d.tau[i] - static_cast<double>(ht_q.tau[i])) <=
                  1e-9 * static_cast<double>(ht_q.tau[i]));
        }
    }
}
