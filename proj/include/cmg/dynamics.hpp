#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cmg/nash.hpp"
#include "cmg/structure.hpp"

namespace cmg {

// Two independent mt19937_64 streams derived from one seed via splitmix64:
// one for the revising-player draw, one for the action draw. Bounded draws
// use rejection on the raw 64-bit output so the sequence does not depend on
// the standard library's distribution implementation.
class DynamicsRng {
public:
    explicit DynamicsRng(std::uint64_t seed)
        : player_stream_(splitmix64(seed)), action_stream_(splitmix64(seed ^ 0x9e3779b97f4a7c15ull)) {}

    int draw_player(int n) { return static_cast<int>(bounded(player_stream_, n)); }
    std::size_t draw_action_index(std::size_t count) { return bounded(action_stream_, count); }

    std::mt19937_64& action_stream() { return action_stream_; }

private:
    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    static std::uint64_t bounded(std::mt19937_64& eng, std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = eng();
        } while (v >= limit);
        return v % n;
    }

    std::mt19937_64 player_stream_;
    std::mt19937_64 action_stream_;
};

struct StepRecord {
    long t = 0;
    int player = 0;
    std::vector<int> action;
    ClassTag tag;
};

enum class Verdict { AbsorbedStrict, AbsorbedClass, NotAbsorbed };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AbsorbedStrict: return "AbsorbedStrict";
        case Verdict::AbsorbedClass: return "AbsorbedClass";
        default: return "NotAbsorbed";
    }
}

struct Trajectory {
    std::uint64_t seed = 0;
    Configuration initial;
    std::vector<StepRecord> steps;
    Configuration final_config;
    Verdict verdict = Verdict::NotAbsorbed;

    explicit Trajectory(Configuration init) : initial(init), final_config(std::move(init)) {}
};

// The class the dynamics is eventually absorbed into for given (n, m).
inline bool in_limit_class(const ClassTag& tag, int n, int m) {
    if (m == 1) {
        if (tag.cls != GraphClass::C2lr) return false;
        return n % 2 == 0 ? (tag.l == n / 2 && tag.r == 0) : (tag.l == (n - 1) / 2 && tag.r == 1);
    }
    if (m == 2) {
        if (tag.cls == GraphClass::RingUnion) return true;
        return n % 3 == 2 && tag.cls == GraphClass::GB3Member;
    }
    return false;
}

// One revision: a uniformly random player redraws its action uniformly from
// its best response set.
template <class T>
std::pair<Configuration, StepRecord> step(const GameParams<T>& params, const Configuration& config,
                                          DynamicsRng& rng) {
    StepRecord record;
    record.player = rng.draw_player(params.n);
    BestResponseSet<T> brs = best_response_set(params, config, record.player);
    record.action = brs.actions[rng.draw_action_index(brs.actions.size())];
    Configuration next = config.with_action(record.player, record.action);
    record.tag = classify(next);
    return {std::move(next), std::move(record)};
}

// Uniform random configuration, drawn from the action stream.
inline Configuration random_configuration(int n, int m, DynamicsRng& rng) {
    std::vector<std::vector<int>> acts(n);
    for (int i = 0; i < n; ++i) {
        std::vector<bool> taken(n, false);
        taken[i] = true;
        while (static_cast<int>(acts[i].size()) < m) {
            int t = static_cast<int>(rng.draw_action_index(n));
            if (!taken[t]) {
                taken[t] = true;
                acts[i].push_back(t);
            }
        }
    }
    return Configuration(n, m, std::move(acts));
}

// Runs the dynamics until one of two stop rules fires: the configuration is
// a Nash equilibrium and has not changed for 2n ln(n) + 50 steps, or the
// class tag has stayed inside the limit class for 50n consecutive steps.
template <class T>
Trajectory run(const GameParams<T>& params, const Configuration& init, std::uint64_t seed,
                  long max_steps = 100000) {
    if (max_steps < 1) throw game_error("max_steps must be at least 1");
    check_config(params, init);
    DynamicsRng rng(seed);
    Trajectory traj(init);
    traj.seed = seed;

    const long fixed_window =
        static_cast<long>(2.0 * params.n * std::log(static_cast<double>(params.n))) + 50;
    const long class_window = 50L * params.n;

    Configuration config = init;
    long unchanged = 0, in_class = 0;
    for (long t = 1; t <= max_steps; ++t) {
        auto [next, record] = step(params, config, rng);
        record.t = t;
        unchanged = (next == config) ? unchanged + 1 : 0;
        in_class = in_limit_class(record.tag, params.n, params.m) ? in_class + 1 : 0;
        config = std::move(next);
        traj.steps.push_back(std::move(record));

        if (unchanged >= fixed_window && is_nash(params, config)) {
            traj.verdict = is_strict_nash(params, config)
                               ? Verdict::AbsorbedStrict
                               : (in_class > 0 ? Verdict::AbsorbedClass : Verdict::NotAbsorbed);
            break;
        }
        if (in_class >= class_window) {
            traj.verdict = Verdict::AbsorbedClass;
            break;
        }
    }
    traj.final_config = config;
    return traj;
}

// Replays a trajectory and checks every recorded action against the
// pre-step best response set, recomputed with backend T.
template <class T>
bool replay_audit(const GameParams<T>& params, const Trajectory& traj) {
    Configuration config = traj.initial;
    for (const StepRecord& record : traj.steps) {
        BestResponseSet<T> brs = best_response_set(params, config, record.player);
        if (!action_in_set(brs, record.action)) return false;
        config = config.with_action(record.player, record.action);
    }
    return config == traj.final_config;
}

}  // namespace cmg
