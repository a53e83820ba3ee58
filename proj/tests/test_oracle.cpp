#include "doctest.h"

#include <set>

#include "cmg/oracle.hpp"
#include "test_util.hpp"

using cmg::Configuration;
using cmg::Rational;

TEST_CASE("action spaces and configuration counts") {
    CHECK(cmg::action_space(4, 2, 0) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(cmg::action_space(3, 1, 1) == std::vector<std::vector<int>>{{0}, {2}});

    CHECK(cmg::configuration_count(3, 1) == 8);       // 2^3
    CHECK(cmg::configuration_count(6, 1) == 15625);   // 5^6
    CHECK(cmg::configuration_count(5, 2) == 7776);    // 6^5
    CHECK(cmg::configuration_count(30, 2) == UINT64_MAX);  // saturates
}

TEST_CASE("enumeration is exhaustive, ordered and chunkable") {
    std::vector<Configuration> all;
    cmg::enumerate_configurations(3, 1, 0, 8, [&](const Configuration& c) { all.push_back(c); });
    REQUIRE(all.size() == 8);
    CHECK(all.front() == Configuration(3, 1, {{1}, {0}, {0}}));
    CHECK(all.back() == Configuration(3, 1, {{2}, {2}, {1}}));
    std::set<Configuration> unique(all.begin(), all.end());
    CHECK(unique.size() == 8);
    CHECK(std::is_sorted(all.begin(), all.end()));

    std::vector<Configuration> chunked;
    cmg::enumerate_configurations(3, 1, 0, 5, [&](const Configuration& c) { chunked.push_back(c); });
    cmg::enumerate_configurations(3, 1, 5, 8, [&](const Configuration& c) { chunked.push_back(c); });
    CHECK(chunked == all);
}

TEST_CASE("n=3, m=1: six equilibria, none strict") {
    for (const Rational& beta : cmgtest::beta_sweep()) {
        auto p = cmg::new_game<Rational>(3, 1, beta, std::nullopt);
        auto res = cmg::enumerate_nash(p);
        CHECK(res.total_configs == 8);
        CHECK(res.nash.size() == 6);
        CHECK(res.strict.empty());
        CHECK(res.mismatches.empty());
        CHECK(res.class_histogram.at("C2(1,1)") == 6);
    }
}

TEST_CASE("n=4, m=1: three strict equilibria (the perfect matchings)") {
    auto p = cmg::new_game<Rational>(4, 1, Rational(17, 20), std::nullopt);
    auto res = cmg::enumerate_nash(p, 2);
    CHECK(res.total_configs == 81);
    CHECK(res.strict.size() == 3);
    CHECK(res.nash.size() == 27);
    CHECK(res.mismatches.empty());
    for (const auto& c : res.strict) CHECK(cmg::classify(c).str() == "C2(2,0)");
}

TEST_CASE("n=4, m=2: the labeled 4-rings are the strict equilibria") {
    auto p = cmg::new_game<Rational>(4, 2, Rational(1, 2), std::nullopt);
    auto res = cmg::enumerate_nash(p);
    CHECK(res.total_configs == 81);
    CHECK(res.strict.size() == 3);  // 3!/2 labeled rings
    CHECK(res.mismatches.empty());
    for (const auto& c : res.strict) {
        auto tag = cmg::classify(c);
        CHECK(tag.cls == cmg::GraphClass::RingUnion);
        CHECK(tag.ring_lengths == std::vector<int>{4});
    }
}

TEST_CASE("non-uniform eta does not change the classification") {
    std::mt19937_64 rng(47);
    auto eta = cmgtest::random_eta(4, rng);
    auto p = cmg::new_game<Rational>(4, 1, Rational(1, 2), eta);
    auto res = cmg::enumerate_nash(p);
    CHECK(res.mismatches.empty());
    CHECK(res.strict.size() == 3);
}

TEST_CASE("theorem verification at odd n") {
    auto p = cmg::new_game<Rational>(5, 1, Rational(1, 2), std::nullopt);
    auto report = cmg::verify_theorems(p, 2);
    CHECK(report.pass);
    CHECK(report.total_configs == 1024);
    CHECK(report.strict_count == 0);
    CHECK(report.nash_count > 0);
}

TEST_CASE("theorem verification covers the explicit non-equilibria") {
    // n=5, m=2 triggers the singleton-into-ring construction
    auto p = cmg::new_game<Rational>(5, 2, Rational(1, 2), std::nullopt);
    auto report = cmg::verify_theorems(p, 4);
    CHECK(report.pass);
    CHECK(report.total_configs == 7776);
    CHECK(report.strict_count == 12);  // 4!/2 labeled 5-rings
}

TEST_CASE("parallel enumeration matches the serial result") {
    auto p = cmg::new_game<Rational>(4, 1, Rational(1, 2), std::nullopt);
    auto serial = cmg::enumerate_nash(p, 1);
    auto parallel = cmg::enumerate_nash(p, 3);
    auto sorted = [](std::vector<Configuration> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(serial.nash) == sorted(parallel.nash));
    CHECK(sorted(serial.strict) == sorted(parallel.strict));
    CHECK(serial.class_histogram == parallel.class_histogram);
}

TEST_CASE("the enumeration cap rejects oversized spaces") {
    auto p = cmg::new_game<Rational>(30, 2, Rational(1, 2), std::nullopt);
    CHECK_THROWS_AS(cmg::enumerate_nash(p), cmg::game_error);
}
