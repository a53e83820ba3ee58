#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "cmg/dynamics.hpp"
#include "cmg/nash.hpp"

namespace cmg {

inline constexpr std::uint64_t kEnumerationCap = 100000000;

// All m-subsets of {0..n-1}\{i} in lexicographic order.
std::vector<std::vector<int>> action_space(int n, int m, int player);

std::uint64_t configuration_count(int n, int m);

// Lexicographic, exhaustive, duplicate-free stream over the full
// configuration space, restricted to [begin, end).
void enumerate_configurations(int n, int m, std::uint64_t begin, std::uint64_t end,
                              const std::function<void(const Configuration&)>& visit);

struct EnumerationResult {
    std::uint64_t total_configs = 0;
    std::vector<Configuration> nash;
    std::vector<Configuration> strict;
    std::map<std::string, long> class_histogram;  // over the Nash set
    std::vector<std::string> mismatches;
};

// Ground truth by exhaustion: every configuration is tested with the
// argmin best response (rational backend expected) and diffed against the
// structural classifier's theorem-level predictions.
template <class T>
EnumerationResult enumerate_nash(const GameParams<T>& params, int jobs = 1) {
    const std::uint64_t total = configuration_count(params.n, params.m);
    if (total > kEnumerationCap) throw game_error("configuration space exceeds enumeration cap");

    struct Chunk {
        EnumerationResult result;
    };
    jobs = std::max(1, jobs);
    std::vector<Chunk> chunks(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t per = (total + jobs - 1) / jobs;

    auto work = [&](int w) {
        const std::uint64_t begin = per * w;
        const std::uint64_t end = std::min(total, begin + per);
        EnumerationResult& res = chunks[w].result;
        enumerate_configurations(params.n, params.m, begin, end, [&](const Configuration& config) {
            const bool nash = is_nash(params, config);
            const bool strict = nash && is_strict_nash(params, config);
            const ClassTag tag = classify(config);

            if (params.m == 1) {
                const bool predicted_nash = tag.cls == GraphClass::C2lr;
                const bool predicted_strict =
                    tag.cls == GraphClass::C2lr && params.n % 2 == 0 && tag.l == params.n / 2;
                if (nash != predicted_nash)
                    res.mismatches.push_back("m=1 Nash/classifier disagreement");
                if (strict != predicted_strict)
                    res.mismatches.push_back("m=1 strict/classifier disagreement");
            } else if (params.m == 2) {
                const bool predicted_strict = tag.cls == GraphClass::RingUnion;
                if (strict != predicted_strict)
                    res.mismatches.push_back("m=2 strict/ring-union disagreement");
                if (nash && !condensation_structure_ok(config))
                    res.mismatches.push_back("m=2 Nash equilibrium fails condensation conditions");
            }
            if (nash) {
                res.nash.push_back(config);
                res.class_histogram[tag.str()]++;
            }
            if (strict) res.strict.push_back(config);
        });
    };
    if (jobs == 1) {
        work(0);
    } else {
        for (int w = 0; w < jobs; ++w) workers.emplace_back(work, w);
        for (auto& th : workers) th.join();
    }

    EnumerationResult merged;
    merged.total_configs = total;
    for (const Chunk& c : chunks) {
        merged.nash.insert(merged.nash.end(), c.result.nash.begin(), c.result.nash.end());
        merged.strict.insert(merged.strict.end(), c.result.strict.begin(), c.result.strict.end());
        for (const auto& [k, v] : c.result.class_histogram) merged.class_histogram[k] += v;
        merged.mismatches.insert(merged.mismatches.end(), c.result.mismatches.begin(),
                                 c.result.mismatches.end());
    }
    return merged;
}

struct TheoremReport {
    bool pass = true;
    std::uint64_t total_configs = 0;
    long nash_count = 0;
    long strict_count = 0;
    std::map<std::string, long> class_histogram;
    std::vector<std::string> failures;
};

// Checks the classification theorems for the given parameters against the
// brute-force enumeration, plus the explicit non-equilibrium constructions
// where n allows them.
template <class T>
TheoremReport verify_theorems(const GameParams<T>& params, int jobs = 1) {
    EnumerationResult res = enumerate_nash(params, jobs);
    TheoremReport report;
    report.total_configs = res.total_configs;
    report.nash_count = static_cast<long>(res.nash.size());
    report.strict_count = static_cast<long>(res.strict.size());
    report.class_histogram = res.class_histogram;
    report.failures = res.mismatches;

    if (params.m == 1 && params.n % 2 == 1 && !res.strict.empty())
        report.failures.push_back("strict equilibria found for odd n, m=1");

    if (params.m == 2) {
        if (params.n >= 5) {
            Configuration c = remark8_singleton_config(params.n - 1);
            if (is_nash(params, c))
                report.failures.push_back("singleton-into-adjacent-ring construction is Nash");
        }
        if (params.n >= 6) {
            Configuration c = remark8_clique_config(params.n - 2);
            if (is_nash(params, c))
                report.failures.push_back("2-clique-into-single-ring-node construction is Nash");
        }
    }
    report.pass = report.failures.empty();
    return report;
}

}  // namespace cmg
