#pragma once

#include <string>
#include <vector>

#include "cmg/game.hpp"

namespace cmg {

// Bonacich centrality: solves (I - beta R^T) pi = (1-beta) eta.
template <class T>
std::vector<T> bonacich_direct(const GameParams<T>& params, const Configuration& config) {
    Matrix<T> r = weight_matrix(params, config);
    Matrix<T> a(params.n, params.n);
    for (int i = 0; i < params.n; ++i)
        for (int j = 0; j < params.n; ++j)
            a(i, j) = (i == j ? T(1) : T(0)) - params.beta * r(j, i);
    std::vector<T> rhs(params.n);
    const T rest = T(1) - params.beta;
    for (int i = 0; i < params.n; ++i) rhs[i] = rest * params.eta[i];
    return solve_dense(std::move(a), std::move(rhs));
}

// Truncated power series (1-beta) sum_{k<=K} beta^k (R^T)^k eta; the L1
// truncation error is at most beta^{K+1}.
template <class T>
std::vector<T> bonacich_power_series(const GameParams<T>& params, const Configuration& config,
                                     int terms_k) {
    if (terms_k < 0) throw game_error("K must be nonnegative");
    Matrix<T> r = weight_matrix(params, config);
    std::vector<T> term = params.eta;
    std::vector<T> sum = params.eta;
    for (int k = 1; k <= terms_k; ++k) {
        term = r.transpose_apply(term);
        for (int i = 0; i < params.n; ++i) {
            term[i] *= params.beta;
            sum[i] += term[i];
        }
    }
    const T rest = T(1) - params.beta;
    for (int i = 0; i < params.n; ++i) sum[i] *= rest;
    return sum;
}

template <class T>
struct HittingTimes {
    int target = 0;
    std::vector<T> tau;  // tau[target] == 0
};

// Expected hitting times on s: solves (I - P_{-s}) tau = 1 with the row and
// column of s removed. Depends only on x_{-s}.
template <class T>
HittingTimes<T> hitting_times(const GameParams<T>& params, const Configuration& config, int s) {
    if (s < 0 || s >= params.n) throw game_error("target out of range");
    Matrix<T> p = transition_matrix(params, config);
    const int k = params.n - 1;
    std::vector<int> idx;
    idx.reserve(k);
    for (int i = 0; i < params.n; ++i)
        if (i != s) idx.push_back(i);

    Matrix<T> a(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c)
            a(r, c) = (r == c ? T(1) : T(0)) - p(idx[r], idx[c]);
    std::vector<T> rhs(k, T(1));
    std::vector<T> sol = solve_dense(std::move(a), std::move(rhs));

    HittingTimes<T> out;
    out.target = s;
    out.tau.assign(params.n, T(0));
    for (int r = 0; r < k; ++r) out.tau[idx[r]] = sol[r];
    return out;
}

// u_s = (1 + sum_i P_si tau_i^s)^{-1}; equals pi_s by the invariant
// distribution identity.
template <class T>
T utility(const GameParams<T>& params, const Configuration& config, int s) {
    HittingTimes<T> ht = hitting_times(params, config, s);
    Matrix<T> p = transition_matrix(params, config);
    T acc(1);
    for (int i = 0; i < params.n; ++i) acc += p(s, i) * ht.tau[i];
    return T(1) / acc;
}

struct BoundReport {
    bool ok = true;
    bool global_bound_tight = false;  // some tau_i at 1/((1-beta) eta_s)
    std::vector<std::string> violations;
};

// Checks the hitting-time upper bounds: the global bound 1/((1-beta) eta_s),
// the sharper pair (T1, T2) for each in-neighbor k, and that equality in the
// global bound only happens with an empty in-neighborhood.
template <class T>
BoundReport check_hitting_bounds(const GameParams<T>& params, const Configuration& config, int s) {
    BoundReport report;
    HittingTimes<T> ht = hitting_times(params, config, s);
    const T one_minus_beta = T(1) - params.beta;
    const T global = T(1) / (one_minus_beta * params.eta[s]);

    bool tight = false;
    for (int i = 0; i < params.n; ++i) {
        if (i == s) continue;
        if (ht.tau[i] > global)
            report.violations.push_back("tau[" + std::to_string(i) + "] exceeds global bound");
        if (Backend<T>::same_value(ht.tau[i], global)) tight = true;
    }
    report.global_bound_tight = tight;

    std::vector<int> in_nb = in_neighborhood(config, s);
    if (tight && !in_nb.empty())
        report.violations.push_back("global bound attained with nonempty in-neighborhood");

    if (params.m == 2) {
        const T half_beta = params.beta / T(2);
        for (int k : in_nb) {
            const T denom = params.eta[s] + half_beta * params.eta[k];
            const T t2 = T(1) / (one_minus_beta * denom);
            const T t1 = (T(1) - half_beta) * t2;
            if (ht.tau[k] > t1)
                report.violations.push_back("tau[" + std::to_string(k) + "] exceeds T1");
            for (int i = 0; i < params.n; ++i) {
                if (i == s || i == k) continue;
                if (ht.tau[i] > t2)
                    report.violations.push_back("tau[" + std::to_string(i) + "] exceeds T2 (k=" +
                                                std::to_string(k) + ")");
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace cmg
