#include "cmg/structure.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace cmg {

std::string ClassTag::str() const {
    std::ostringstream os;
    switch (cls) {
        case GraphClass::C2lr:
            os << "C2(" << l << "," << r << ")";
            break;
        case GraphClass::RingUnion: {
            os << "RingUnion(";
            for (std::size_t i = 0; i < ring_lengths.size(); ++i)
                os << (i ? "+" : "") << ring_lengths[i];
            os << ")";
            break;
        }
        case GraphClass::GB3Member:
            os << "GB3";
            break;
        case GraphClass::ButterflyComposite:
            os << "ButterflyComposite";
            break;
        case GraphClass::Other:
            os << "Other";
            break;
    }
    return os.str();
}

Condensation condensation(const Configuration& config) {
    const int n = config.n();
    Condensation out;
    out.comp_of.assign(n, -1);

    // Tarjan, recursive; n is small.
    std::vector<int> index(n, -1), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int counter = 0;

    std::function<void(int)> strongconnect = [&](int v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : config.action(v)) {
            if (index[w] == -1) {
                strongconnect(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            int id = static_cast<int>(out.members.size());
            for (int u : comp) out.comp_of[u] = id;
            out.members.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] == -1) strongconnect(v);

    const int k = static_cast<int>(out.members.size());
    out.dag_out.assign(k, {});
    out.dag_in_degree.assign(k, 0);
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < n; ++v)
        for (int w : config.action(v)) {
            int a = out.comp_of[v], b = out.comp_of[w];
            if (a != b && seen.insert({a, b}).second) {
                out.dag_out[a].push_back(b);
                out.dag_in_degree[b]++;
            }
        }
    return out;
}

ClassTag classify_m1(const Configuration& config) {
    const int n = config.n();
    ClassTag other;
    if (config.m() != 1) return other;

    std::vector<bool> in_pair(n, false);
    int pairs = 0;
    for (int i = 0; i < n; ++i) {
        int j = config.action(i)[0];
        if (config.action(j)[0] == i) {
            if (!in_pair[i]) {
                in_pair[i] = in_pair[j] = true;
                ++pairs;
            }
        }
    }
    int singletons = 0;
    for (int i = 0; i < n; ++i) {
        if (in_pair[i]) continue;
        // must be a zero-in-degree node pointing into some 2-clique
        if (!in_neighborhood(config, i).empty()) return other;
        if (!in_pair[config.action(i)[0]]) return other;
        ++singletons;
    }
    ClassTag tag;
    tag.cls = GraphClass::C2lr;
    tag.l = pairs;
    tag.r = singletons;
    return tag;
}

namespace {

enum class CompKind { Ring, Clique2, Butterfly, Diamond, Node, Other };

struct CompInfo {
    CompKind kind;
    int size;
};

bool edges_internal(const Configuration& config, const std::vector<int>& nodes) {
    std::vector<bool> inside(config.n(), false);
    for (int v : nodes) inside[v] = true;
    for (int v : nodes)
        for (int w : config.action(v))
            if (!inside[w]) return false;
    return true;
}

// Undirected 2-regular strongly connected component of size >= 3 is a cycle.
bool is_ring_component(const Configuration& config, const std::vector<int>& nodes) {
    if (nodes.size() < 3) return false;
    if (!edges_internal(config, nodes)) return false;
    for (int v : nodes)
        for (int w : config.action(v))
            if (!config.has_edge(w, v)) return false;
    return true;
}

// Isomorphism of a small component against a canonical action list, by
// trying every relabeling.
bool matches_canonical(const Configuration& config, const std::vector<int>& nodes,
                       const std::vector<std::vector<int>>& canon) {
    const int k = static_cast<int>(canon.size());
    if (static_cast<int>(nodes.size()) != k) return false;
    if (!edges_internal(config, nodes)) return false;

    std::vector<int> local_of(config.n(), -1);
    for (int i = 0; i < k; ++i) local_of[nodes[i]] = i;
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
        for (int w : config.action(nodes[i])) adj[i].push_back(local_of[w]);

    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int i = 0; i < k && match; ++i) {
            std::vector<int> mapped;
            for (int t : adj[i]) mapped.push_back(perm[t]);
            std::sort(mapped.begin(), mapped.end());
            match = mapped == canon[perm[i]];
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CompInfo component_info(const Configuration& config, const std::vector<int>& nodes) {
    const int size = static_cast<int>(nodes.size());
    if (size == 1) return {CompKind::Node, size};
    if (size == 2) {
        int a = nodes[0], b = nodes[1];
        if (config.has_edge(a, b) && config.has_edge(b, a)) return {CompKind::Clique2, size};
        return {CompKind::Other, size};
    }
    if (is_ring_component(config, nodes)) return {CompKind::Ring, size};
    if (size == 4 && is_diamond(config, nodes)) return {CompKind::Diamond, size};
    if (size == 5 && is_butterfly(config, nodes)) return {CompKind::Butterfly, size};
    return {CompKind::Other, size};
}

}  // namespace

bool is_butterfly(const Configuration& config, const std::vector<int>& nodes) {
    static const std::vector<std::vector<int>> canon = {
        {1, 2}, {0, 2}, {1, 3}, {2, 4}, {2, 3}};
    return matches_canonical(config, nodes, canon);
}

bool is_diamond(const Configuration& config, const std::vector<int>& nodes) {
    // path of 2-cliques 1-0-2-3 with chords 1->2 and 3->0
    static const std::vector<std::vector<int>> canon = {
        {1, 2}, {0, 2}, {0, 3}, {0, 2}};
    return matches_canonical(config, nodes, canon);
}

ClassTag classify_m2(const Configuration& config) {
    ClassTag other;
    if (config.m() != 2) return other;

    Condensation cond = condensation(config);
    std::vector<int> ring_lengths;
    std::vector<int> clique_comps;
    int butterflies = 0;
    for (std::size_t c = 0; c < cond.members.size(); ++c) {
        CompInfo info = component_info(config, cond.members[c]);
        switch (info.kind) {
            case CompKind::Ring:
                ring_lengths.push_back(info.size);
                break;
            case CompKind::Clique2:
                clique_comps.push_back(static_cast<int>(c));
                break;
            case CompKind::Butterfly:
                ++butterflies;
                break;
            default:
                return other;
        }
    }
    std::sort(ring_lengths.begin(), ring_lengths.end());

    if (clique_comps.empty() && butterflies == 0) {
        ClassTag tag;
        tag.cls = GraphClass::RingUnion;
        tag.ring_lengths = ring_lengths;
        return tag;
    }

    const bool all_rings_len3 =
        std::all_of(ring_lengths.begin(), ring_lengths.end(), [](int l) { return l == 3; });

    if (butterflies == 1 && clique_comps.empty()) {
        ClassTag tag;
        tag.ring_lengths = ring_lengths;
        tag.cls = all_rings_len3 ? GraphClass::GB3Member : GraphClass::ButterflyComposite;
        return tag;
    }
    if (butterflies == 0 && clique_comps.size() == 1 && all_rings_len3 && !ring_lengths.empty()) {
        // both out-links of the clique must land on ring nodes
        std::vector<bool> on_ring(config.n(), false);
        for (std::size_t c = 0; c < cond.members.size(); ++c)
            if (static_cast<int>(c) != clique_comps[0])
                for (int v : cond.members[c]) on_ring[v] = true;
        for (int v : cond.members[clique_comps[0]])
            for (int w : config.action(v))
                if (cond.comp_of[w] != clique_comps[0] && !on_ring[w]) return other;
        ClassTag tag;
        tag.cls = GraphClass::GB3Member;
        tag.ring_lengths = ring_lengths;
        return tag;
    }
    return other;
}

ClassTag classify(const Configuration& config) {
    if (config.m() == 1) return classify_m1(config);
    if (config.m() == 2) return classify_m2(config);
    return ClassTag{};
}

bool condensation_structure_ok(const Configuration& config) {
    Condensation cond = condensation(config);
    for (std::size_t c = 0; c < cond.members.size(); ++c) {
        const bool is_sink = cond.dag_out[c].empty();
        CompInfo info = component_info(config, cond.members[c]);
        if (is_sink) {
            if (info.kind != CompKind::Ring && info.kind != CompKind::Butterfly &&
                info.kind != CompKind::Diamond)
                return false;
        } else {
            if (cond.dag_in_degree[c] != 0) return false;  // neither sink nor source
            if (info.kind != CompKind::Node && info.kind != CompKind::Clique2) return false;
        }
    }
    return true;
}

std::vector<std::vector<int>> structural_best_response_m1(const Configuration& config, int s) {
    if (config.m() != 1) throw game_error("structural_best_response_m1 requires m=1");
    std::vector<int> in_nb = in_neighborhood(config, s);
    std::vector<std::vector<int>> out;
    if (!in_nb.empty()) {
        for (int v : in_nb) out.push_back({v});
    } else {
        for (int v = 0; v < config.n(); ++v)
            if (v != s) out.push_back({v});
    }
    return out;
}

bool M2Support::contains(int v, int w) const {
    if (v > w) std::swap(v, w);
    return std::find(pairs.begin(), pairs.end(), std::array<int, 2>{v, w}) != pairs.end();
}

M2Support structural_br_support_m2(const Configuration& config, int s) {
    if (config.m() != 2) throw game_error("structural_br_support_m2 requires m=2");
    const int n = config.n();
    M2Support out;
    std::vector<int> nb2 = in_neighborhood2(config, s);

    std::set<std::array<int, 2>> pairs;
    auto add = [&](int v, int w) {
        if (v == w || v == s || w == s) return;
        if (v > w) std::swap(v, w);
        pairs.insert({v, w});
    };

    if (nb2.empty()) {
        out.exact = true;
        for (int v = 0; v < n; ++v)
            for (int w = v + 1; w < n; ++w) add(v, w);
    } else if (nb2.size() == 1) {
        out.exact = true;
        int r = nb2[0];
        for (int v = 0; v < n; ++v) add(r, v);
    } else {
        out.exact = false;
        std::vector<int> nb = in_neighborhood(config, s);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) add(nb[a], nb[b]);
        for (int v : nb)
            for (int w : in_neighborhood(config, v)) add(v, w);
    }
    out.pairs.assign(pairs.begin(), pairs.end());
    return out;
}

Configuration butterfly_configuration() {
    return Configuration(5, 2, {{1, 2}, {0, 2}, {1, 3}, {2, 4}, {2, 3}});
}

std::vector<std::vector<int>> ring_actions(int len) {
    std::vector<std::vector<int>> acts(len);
    for (int i = 0; i < len; ++i) acts[i] = {(i + 1) % len, (i + len - 1) % len};
    return acts;
}

Configuration remark8_singleton_config(int ring_len) {
    if (ring_len < 4) throw game_error("Remark 8 needs ring length >= 4");
    auto acts = ring_actions(ring_len);
    acts.push_back({0, 1});  // singleton into two adjacent ring nodes
    return Configuration(ring_len + 1, 2, std::move(acts));
}

Configuration remark8_clique_config(int ring_len) {
    if (ring_len < 4) throw game_error("Remark 8 needs ring length >= 4");
    auto acts = ring_actions(ring_len);
    const int j = ring_len, k = ring_len + 1;
    acts.push_back({k, 0});  // 2-clique, both members into ring node 0
    acts.push_back({j, 0});
    return Configuration(ring_len + 2, 2, std::move(acts));
}

}  // namespace cmg
