#pragma once

#include <array>
#include <string>
#include <vector>

#include "cmg/game.hpp"

namespace cmg {

enum class GraphClass { C2lr, RingUnion, GB3Member, ButterflyComposite, Other };

struct ClassTag {
    GraphClass cls = GraphClass::Other;
    int l = 0;  // number of 2-cliques (C2lr only)
    int r = 0;  // number of singletons (C2lr only)
    std::vector<int> ring_lengths;

    bool operator==(const ClassTag& o) const {
        return cls == o.cls && l == o.l && r == o.r && ring_lengths == o.ring_lengths;
    }
    std::string str() const;
};

// Condensation of G(x): Tarjan SCCs plus the induced DAG.
struct Condensation {
    std::vector<int> comp_of;               // node -> component id
    std::vector<std::vector<int>> members;  // component id -> sorted nodes
    std::vector<std::vector<int>> dag_out;  // component id -> successor ids (deduped)
    std::vector<int> dag_in_degree;
};

Condensation condensation(const Configuration& config);

// Structural recognizers. These look only at the graph, never at beta or eta.
ClassTag classify_m1(const Configuration& config);
ClassTag classify_m2(const Configuration& config);
ClassTag classify(const Configuration& config);

bool is_butterfly(const Configuration& config, const std::vector<int>& nodes);

// The 4-node "diamond": a path of three 2-cliques a-h1-h2-b whose endpoint
// nodes close it with directed chords a->h2 and b->h1. Exhaustive search
// shows diamonds occur as sinks of (non-strict) m=2 equilibria, so the sink
// catalog below includes them. The analogous 5-node shape is the Butterfly;
// longer chains of this kind are never at equilibrium.
bool is_diamond(const Configuration& config, const std::vector<int>& nodes);

// Necessary conditions on the condensation of an m=2 Nash equilibrium:
// every component is a source or a sink; sources are singletons or
// 2-cliques; sinks are rings, the Butterfly or the diamond.
bool condensation_structure_ok(const Configuration& config);

// m=1 best response without a linear solve: the in-neighborhood when
// nonempty, everything else otherwise.
std::vector<std::vector<int>> structural_best_response_m1(const Configuration& config, int s);

struct M2Support {
    bool exact = false;  // true when the support is the best response set itself
    std::vector<std::array<int, 2>> pairs;

    bool contains(int v, int w) const;
};

// m=2 locality: a superset of the best response set built from the
// in-neighborhood at distance at most two.
M2Support structural_br_support_m2(const Configuration& config, int s);

// The canonical 5-node Butterfly, centered on `center` with wing pairs
// (a1,b1) and (a2,b2): b's form 2-cliques with their a's, a's point at the
// center, the center points at one b per wing.
Configuration butterfly_configuration();

// Ring on nodes 0..len-1 embedded in a graph of n nodes (helper for tests
// and the Remark-8 constructions).
std::vector<std::vector<int>> ring_actions(int len);

Configuration remark8_singleton_config(int ring_len);  // n = ring_len + 1
Configuration remark8_clique_config(int ring_len);     // n = ring_len + 2

}  // namespace cmg
