#pragma once

#include <random>
#include <vector>

#include "cmg/game.hpp"
#include "cmg/numeric.hpp"

namespace cmgtest {

inline cmg::Configuration random_config(int n, int m, std::mt19937_64& rng) {
    std::vector<std::vector<int>> acts(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < n; ++i) {
        std::vector<bool> taken(n, false);
        taken[i] = true;
        while (static_cast<int>(acts[i].size()) < m) {
            int t = pick(rng);
            if (!taken[t]) {
                taken[t] = true;
                acts[i].push_back(t);
            }
        }
    }
    return cmg::Configuration(n, m, std::move(acts));
}

// Strictly positive rationals summing to one, from small integer weights.
inline std::vector<cmg::Rational> random_eta(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> w(1, 10);
    std::vector<int> weights(n);
    int sum = 0;
    for (int& v : weights) {
        v = w(rng);
        sum += v;
    }
    std::vector<cmg::Rational> eta(n);
    for (int i = 0; i < n; ++i) eta[i] = cmg::Rational(weights[i], sum);
    return eta;
}

inline std::vector<double> to_doubles(const std::vector<cmg::Rational>& v) {
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(static_cast<double>(r));
    return out;
}

inline std::vector<cmg::Rational> beta_sweep() {
    return {cmg::Rational(1, 10), cmg::Rational(1, 2), cmg::Rational(17, 20),
            cmg::Rational(99, 100)};
}

}  // namespace cmgtest
