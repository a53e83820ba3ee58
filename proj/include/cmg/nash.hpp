#pragma once

#include <optional>
#include <vector>

#include "cmg/best_response.hpp"
#include "cmg/structure.hpp"

namespace cmg {

struct Witness {
    int player = 0;
    std::vector<int> better_action;
};

// First player (lowest index) not playing a best response, with the
// lexicographically smallest improving action.
template <class T>
std::optional<Witness> nash_witness(const GameParams<T>& params, const Configuration& config) {
    for (int s = 0; s < params.n; ++s) {
        BestResponseSet<T> brs = best_response_set(params, config, s);
        if (!action_in_set(brs, config.action(s)))
            return Witness{s, brs.actions.front()};
    }
    return std::nullopt;
}

template <class T>
bool is_nash(const GameParams<T>& params, const Configuration& config) {
    return !nash_witness(params, config).has_value();
}

template <class T>
bool is_strict_nash(const GameParams<T>& params, const Configuration& config) {
    for (int s = 0; s < params.n; ++s) {
        BestResponseSet<T> brs = best_response_set(params, config, s);
        if (brs.actions.size() != 1 || brs.actions.front() != config.action(s)) return false;
    }
    return true;
}

// Verifies the condensation necessary conditions on a configuration that
// must already be a Nash equilibrium.
template <class T>
bool check_condensation_necessary(const GameParams<T>& params, const Configuration& config) {
    if (params.m != 2) throw game_error("condensation conditions apply to m=2");
    if (!is_nash(params, config))
        throw game_error("check_condensation_necessary requires a Nash equilibrium");
    return condensation_structure_ok(config);
}

struct EquilibriumReport {
    bool nash = false;
    bool strict = false;
    std::optional<Witness> witness;
    ClassTag tag;
    bool condensation_ok = false;  // meaningful for m=2 Nash equilibria
};

template <class T>
EquilibriumReport equilibrium_report(const GameParams<T>& params, const Configuration& config) {
    EquilibriumReport report;
    report.witness = nash_witness(params, config);
    report.nash = !report.witness.has_value();
    report.strict = report.nash && is_strict_nash(params, config);
    report.tag = classify(config);
    report.condensation_ok =
        params.m == 2 && report.nash ? condensation_structure_ok(config) : report.nash;
    return report;
}

}  // namespace cmg
