#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmg/linalg.hpp"
#include "cmg/numeric.hpp"

namespace cmg {

// A strategy profile: node i plays a set of exactly m distinct targets,
// stored sorted. Node indices are 0-based everywhere in the library; the
// CLI shifts to 1-based on input and output.
class Configuration {
public:
    Configuration(int n, int m, std::vector<std::vector<int>> actions);

    int n() const { return n_; }
    int m() const { return m_; }
    const std::vector<int>& action(int i) const { return actions_[i]; }
    const std::vector<std::vector<int>>& actions() const { return actions_; }

    bool has_edge(int i, int j) const {
        const auto& a = actions_[i];
        return std::binary_search(a.begin(), a.end(), j);
    }

    Configuration with_action(int player, std::vector<int> action) const;

    bool operator==(const Configuration& other) const {
        return n_ == other.n_ && m_ == other.m_ && actions_ == other.actions_;
    }
    bool operator<(const Configuration& other) const { return actions_ < other.actions_; }

private:
    int n_, m_;
    std::vector<std::vector<int>> actions_;
};

// N^-_s and N^-2_s. Both depend only on the links of players other than s;
// s itself is never a member.
std::vector<int> in_neighborhood(const Configuration& config, int s);
std::vector<int> in_neighborhood2(const Configuration& config, int s);

template <class T>
struct GameParams {
    int n = 0;
    int m = 0;
    T beta{};
    std::vector<T> eta;
};

template <class T>
GameParams<T> new_game(int n, int m, const T& beta, std::optional<std::vector<T>> eta_option) {
    if (m < 1) throw game_error("m must be a positive integer");
    if (n < m + 1) throw game_error("n must be at least m+1");
    if (!(beta > T(0)) || !(beta < T(1))) throw game_error("beta must lie in (0,1)");

    std::vector<T> eta;
    if (eta_option) {
        eta = std::move(*eta_option);
        if (static_cast<int>(eta.size()) != n) throw game_error("eta has wrong length");
        T sum(0);
        for (const T& e : eta) {
            if (!(e > T(0))) throw game_error("eta entries must be strictly positive");
            sum += e;
        }
        if (!Backend<T>::same_value(sum, T(1))) throw game_error("eta must sum to 1");
    } else {
        eta.assign(n, T(1) / T(n));
    }
    return GameParams<T>{n, m, beta, std::move(eta)};
}

template <class T>
void check_config(const GameParams<T>& params, const Configuration& config) {
    if (config.n() != params.n || config.m() != params.m)
        throw game_error("configuration does not match game parameters");
}

// R(x): 1/m on chosen targets, zero elsewhere.
template <class T>
Matrix<T> weight_matrix(const GameParams<T>& params, const Configuration& config) {
    check_config(params, config);
    Matrix<T> r(params.n, params.n);
    const T w = T(1) / T(params.m);
    for (int i = 0; i < params.n; ++i)
        for (int j : config.action(i)) r(i, j) = w;
    return r;
}

// P(x) = beta R(x) + (1-beta) 1 eta^T. Entrywise positive, hence irreducible.
template <class T>
Matrix<T> transition_matrix(const GameParams<T>& params, const Configuration& config) {
    Matrix<T> p = weight_matrix(params, config);
    const T rest = T(1) - params.beta;
    for (int i = 0; i < params.n; ++i)
        for (int j = 0; j < params.n; ++j) {
            p(i, j) = params.beta * p(i, j) + rest * params.eta[j];
        }
    return p;
}

}  // namespace cmg
