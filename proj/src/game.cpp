#include "cmg/game.hpp"

#include <algorithm>

namespace cmg {

Configuration::Configuration(int n, int m, std::vector<std::vector<int>> actions)
    : n_(n), m_(m), actions_(std::move(actions)) {
    if (static_cast<int>(actions_.size()) != n_)
        throw game_error("configuration needs one action per node");
    for (int i = 0; i < n_; ++i) {
        auto& a = actions_[i];
        std::sort(a.begin(), a.end());
        if (static_cast<int>(a.size()) != m_)
            throw game_error("node " + std::to_string(i) + ": action must have exactly m targets");
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw game_error("node " + std::to_string(i) + ": duplicate target");
        for (int j : a) {
            if (j < 0 || j >= n_) throw game_error("node " + std::to_string(i) + ": target out of range");
            if (j == i) throw game_error("node " + std::to_string(i) + ": self-loop");
        }
    }
}

Configuration Configuration::with_action(int player, std::vector<int> action) const {
    std::vector<std::vector<int>> acts = actions_;
    acts[player] = std::move(action);
    return Configuration(n_, m_, std::move(acts));
}

std::vector<int> in_neighborhood(const Configuration& config, int s) {
    std::vector<int> out;
    for (int i = 0; i < config.n(); ++i)
        if (i != s && config.has_edge(i, s)) out.push_back(i);
    return out;
}

std::vector<int> in_neighborhood2(const Configuration& config, int s) {
    std::vector<bool> seen(config.n(), false);
    for (int t : in_neighborhood(config, s)) {
        seen[t] = true;
        for (int i : in_neighborhood(config, t)) seen[i] = true;
    }
    seen[s] = false;
    std::vector<int> out;
    for (int i = 0; i < config.n(); ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

}  // namespace cmg
