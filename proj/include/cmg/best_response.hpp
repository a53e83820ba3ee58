#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cmg/centrality.hpp"
#include "cmg/game.hpp"

namespace cmg {

// All optimal m-subsets for one player, fully materialized, in
// lexicographic order, together with the attained objective
// (1/m) * sum of the m smallest hitting times.
template <class T>
struct BestResponseSet {
    int player = 0;
    std::vector<std::vector<int>> actions;
    T min_value{};
};

inline constexpr std::uint64_t kBestResponseCap = 1000000;

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

inline void combinations(const std::vector<int>& pool, int k,
                         const std::vector<int>& mandatory,
                         std::vector<std::vector<int>>& out) {
    std::vector<int> pick(k);
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    const int n = static_cast<int>(pool.size());
    while (true) {
        std::vector<int> action = mandatory;
        for (int i = 0; i < k; ++i) action.push_back(pool[idx[i]]);
        std::sort(action.begin(), action.end());
        out.push_back(std::move(action));
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace detail

// Best response via the hitting-time argmin: the objective over an action
// set is the mean of its tau values, so the optimum selects the m smallest
// and every set of tied candidates expands combinatorially.
template <class T>
BestResponseSet<T> best_response_set(const GameParams<T>& params, const Configuration& config,
                                     int s) {
    if (s < 0 || s >= params.n) throw game_error("player out of range");
    HittingTimes<T> ht = hitting_times(params, config, s);

    std::vector<int> order;
    for (int i = 0; i < params.n; ++i)
        if (i != s) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ht.tau[a] < ht.tau[b]; });

    // Group adjacent equal values; in float mode equality is the tie
    // tolerance of the backend, applied between sorted neighbors.
    std::vector<int> group_of(order.size());
    int group = 0;
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (!Backend<T>::same_value(ht.tau[order[i - 1]], ht.tau[order[i]])) ++group;
        group_of[i] = group;
    }

    const int m = params.m;
    const int boundary_group = group_of[m - 1];
    std::vector<int> mandatory, tied;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (group_of[i] < boundary_group) mandatory.push_back(order[i]);
        else if (group_of[i] == boundary_group) tied.push_back(order[i]);
    }
    std::sort(mandatory.begin(), mandatory.end());
    std::sort(tied.begin(), tied.end());
    const int need = m - static_cast<int>(mandatory.size());

    if (detail::binomial(tied.size(), need) > kBestResponseCap)
        throw game_error("best response set would exceed the materialization cap");

    BestResponseSet<T> out;
    out.player = s;
    T sum(0);
    for (int i = 0; i < m; ++i) sum += ht.tau[order[i]];
    out.min_value = sum / T(m);
    detail::combinations(tied, need, mandatory, out.actions);
    std::sort(out.actions.begin(), out.actions.end());
    return out;
}

template <class T>
bool action_in_set(const BestResponseSet<T>& brs, const std::vector<int>& action) {
    return std::binary_search(brs.actions.begin(), brs.actions.end(), action);
}

}  // namespace cmg
