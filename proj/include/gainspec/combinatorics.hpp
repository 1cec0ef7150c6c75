#ifndef GAINSPEC_COMBINATORICS_HPP
#define GAINSPEC_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gainspec/gain_graph.hpp"
#include "gainspec/unit_complex.hpp"

namespace gainspec {

/// A documented size or enumeration cap was exceeded.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr double kGainTol = 1e-9;

// ---------------------------------------------------------------------------
// Components / bipartiteness
// ---------------------------------------------------------------------------

inline std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        const int id = static_cast<int>(out.size());
        out.push_back({});
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int u = 0; u < g.n; ++u)
                if (g.has_edge(v, u) && comp[u] < 0) { comp[u] = id; stack.push_back(u); }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

inline bool is_connected(const SimpleGraph& g) {
    return g.n <= 1 || components(g).size() == 1;
}

/// 2-coloring if one exists.
inline std::optional<std::vector<int>> bipartition(const SimpleGraph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[u] < 0) { color[u] = 1 - color[v]; stack.push_back(u); }
                else if (color[u] == color[v]) return std::nullopt;
            }
        }
    }
    return color;
}

inline bool is_bipartite(const SimpleGraph& g) { return bipartition(g).has_value(); }

/// Complete bipartite test; on success reports the two part sizes (p <= q).
inline std::optional<std::pair<int, int>> complete_bipartite_parts(const SimpleGraph& g) {
    if (g.n < 2 || !is_connected(g)) return std::nullopt;
    auto color = bipartition(g);
    if (!color) return std::nullopt;
    int p = 0, q = 0;
    for (int v = 0; v < g.n; ++v) (((*color)[v] == 0) ? p : q)++;
    if (g.edge_count() != p * q) return std::nullopt;
    if (p > q) std::swap(p, q);
    return std::make_pair(p, q);
}

// ---------------------------------------------------------------------------
// Maximum matching (blossom algorithm, general graphs)
// ---------------------------------------------------------------------------

namespace detail {

class Blossom {
public:
    explicit Blossom(const SimpleGraph& g) : g_(g), n_(g.n), match_(g.n, -1) {}

    int solve() {
        int res = 0;
        for (int v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            int u = find_augmenting_path(v);
            if (u >= 0) {
                ++res;
                while (u >= 0) {
                    int pv = parent_[u], ppv = match_[pv];
                    match_[u] = pv;
                    match_[pv] = u;
                    u = ppv;
                }
            }
        }
        return res;
    }

private:
    int lca(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(std::vector<char>& in_blossom, int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom[base_[v]] = 1;
            in_blossom[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to = 0; to < n_; ++to) {
                if (!g_.has_edge(v, to)) continue;
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur_base = lca(v, to);
                    std::vector<char> in_blossom(n_, 0);
                    mark_path(in_blossom, v, cur_base, to);
                    mark_path(in_blossom, to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) { used_[i] = 1; queue.push_back(i); }
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_;
};

}  // namespace detail

inline int matching_number(const SimpleGraph& g) { return detail::Blossom(g).solve(); }
inline int matching_number(const GainGraph& g) { return matching_number(g.underlying()); }

// ---------------------------------------------------------------------------
// Minimum vertex cover (exact branch and bound, n <= 40)
// ---------------------------------------------------------------------------

namespace detail {

/// Branch and bound on bitmask adjacency with degree-1/degree-2 reductions
/// and a greedy-matching lower bound.
class VertexCoverSolver {
public:
    explicit VertexCoverSolver(const SimpleGraph& g) : n_(g.n), adj_(g.adj) {}

    int solve() {
        best_ = n_;
        const std::uint64_t all = (n_ == 64) ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << n_) - 1);
        recurse(adj_, all, 0);
        return best_;
    }

private:
    static int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

    void recurse(std::vector<std::uint64_t> adj, std::uint64_t active, int taken) {
        // Reductions run to a fixed point.
        for (;;) {
            if (taken >= best_) return;
            bool changed = false;
            for (int v = 0; v < n_ && !changed; ++v) {
                if (!((active >> v) & 1)) continue;
                const std::uint64_t nb = adj[v] & active;
                const int deg = popcount(nb);
                if (deg == 0) { active &= ~(std::uint64_t{1} << v); changed = true; continue; }
                if (deg == 1) {
                    // A pendant vertex: take its neighbor.
                    const int u = __builtin_ctzll(nb);
                    remove_vertex(adj, active, u);
                    ++taken;
                    changed = true;
                    continue;
                }
                if (deg == 2) {
                    const int u = __builtin_ctzll(nb);
                    const int w = 63 - __builtin_clzll(nb);
                    if ((adj[u] >> w) & 1) {
                        // Triangle: covering with {u, w} is always optimal.
                        remove_vertex(adj, active, u);
                        remove_vertex(adj, active, w);
                        taken += 2;
                    } else {
                        // Fold u-v-w into v: tau = 1 + tau(folded graph).
                        const std::uint64_t merged =
                            (adj[u] | adj[w]) & active &
                            ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v) |
                              (std::uint64_t{1} << w));
                        remove_vertex(adj, active, u);
                        remove_vertex(adj, active, w);
                        adj[v] = merged;
                        for (int t = 0; t < n_; ++t) {
                            if ((merged >> t) & 1) adj[t] |= (std::uint64_t{1} << v);
                        }
                        active |= (std::uint64_t{1} << v);
                        ++taken;
                    }
                    changed = true;
                }
            }
            if (!changed) break;
        }
        // Edge-free: done.
        int max_deg = 0, branch_v = -1;
        std::uint64_t seen = active;
        for (int v = 0; v < n_; ++v) {
            if (!((seen >> v) & 1)) continue;
            const int deg = popcount(adj[v] & active);
            if (deg > max_deg) { max_deg = deg; branch_v = v; }
        }
        if (branch_v < 0) { best_ = std::min(best_, taken); return; }

        if (taken + greedy_matching_bound(adj, active) >= best_) return;

        // Include branch_v.
        {
            auto adj2 = adj;
            auto act2 = active;
            remove_vertex(adj2, act2, branch_v);
            recurse(std::move(adj2), act2, taken + 1);
        }
        // Exclude branch_v: all its neighbors must be in the cover.
        {
            auto adj2 = adj;
            auto act2 = active;
            const std::uint64_t nb = adj[branch_v] & active;
            int add = 0;
            for (int u = 0; u < n_; ++u)
                if ((nb >> u) & 1) { remove_vertex(adj2, act2, u); ++add; }
            act2 &= ~(std::uint64_t{1} << branch_v);
            recurse(std::move(adj2), act2, taken + add);
        }
    }

    void remove_vertex(std::vector<std::uint64_t>& adj, std::uint64_t& active, int v) {
        active &= ~(std::uint64_t{1} << v);
        for (int t = 0; t < n_; ++t) adj[t] &= ~(std::uint64_t{1} << v);
        adj[v] = 0;
    }

    int greedy_matching_bound(const std::vector<std::uint64_t>& adj, std::uint64_t active) const {
        std::uint64_t avail = active;
        int m = 0;
        for (int v = 0; v < n_; ++v) {
            if (!((avail >> v) & 1)) continue;
            const std::uint64_t nb = adj[v] & avail & ~(std::uint64_t{1} << v);
            if (nb) {
                const int u = __builtin_ctzll(nb);
                avail &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << u));
                ++m;
            }
        }
        return m;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    int best_ = 0;
};

}  // namespace detail

inline int vertex_cover_number(const SimpleGraph& g, int size_cap = 40) {
    if (g.n > size_cap)
        throw CapExceeded("vertex_cover_number: size cap exceeded");
    return detail::VertexCoverSolver(g).solve();
}
inline int vertex_cover_number(const GainGraph& g, int size_cap = 40) {
    return vertex_cover_number(g.underlying(), size_cap);
}

// ---------------------------------------------------------------------------
// Simple cycle enumeration / odd cycle count
// ---------------------------------------------------------------------------

/// Visits every simple cycle exactly once: the smallest vertex of the cycle
/// comes first and its smaller neighbor second. The callback receives the
/// vertex sequence (closing edge implied).
template <typename Callback>
inline void enumerate_simple_cycles(const SimpleGraph& g, Callback&& cb,
                                    std::size_t cycle_cap = 1000000) {
    std::size_t found = 0;
    std::vector<int> path;
    std::vector<char> on_path(g.n, 0);

    auto dfs = [&](auto&& self, int v, int start) -> void {
        for (int u = start + 1; u < g.n; ++u) {
            if (!g.has_edge(v, u)) continue;
            if (on_path[u]) continue;
            path.push_back(u);
            on_path[u] = 1;
            if (path.size() >= 3 && g.has_edge(u, start) && path[1] < u) {
                if (++found > cycle_cap)
                    throw CapExceeded("enumerate_simple_cycles: cycle cap exceeded");
                cb(path);
            }
            self(self, u, start);
            on_path[u] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < g.n; ++s) {
        path.assign(1, s);
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        // Expand first step manually so path[1] is defined before the
        // double-count guard applies.
        for (int u = s + 1; u < g.n; ++u) {
            if (!g.has_edge(s, u)) continue;
            path.push_back(u);
            on_path[u] = 1;
            dfs(dfs, u, s);
            on_path[u] = 0;
            path.pop_back();
        }
    }
}

inline int odd_cycle_count(const SimpleGraph& g, int size_cap = 16,
                           std::size_t cycle_cap = 1000000) {
    if (g.n > size_cap) throw CapExceeded("odd_cycle_count: size cap exceeded");
    int odd = 0;
    enumerate_simple_cycles(g, [&](const std::vector<int>& cyc) {
        if (cyc.size() % 2 == 1) ++odd;
    }, cycle_cap);
    return odd;
}
inline int odd_cycle_count(const GainGraph& g, int size_cap = 16,
                           std::size_t cycle_cap = 1000000) {
    return odd_cycle_count(g.underlying(), size_cap, cycle_cap);
}

// ---------------------------------------------------------------------------
// Bipartite obstruction b(G) and the acyclic-deletion matching maximum
// ---------------------------------------------------------------------------

inline SimpleGraph delete_vertices_mask(const SimpleGraph& g, std::uint64_t drop) {
    SimpleGraph h(g.n);
    for (int v = 0; v < g.n; ++v) {
        if ((drop >> v) & 1) continue;
        h.adj[v] = g.adj[v] & ~drop;
    }
    for (int v = 0; v < g.n; ++v)
        if ((drop >> v) & 1) h.adj[v] = 0;
    return h;
}

/// Minimum |U| with G-U bipartite, by subset search in increasing size.
inline int bipartite_obstruction(const SimpleGraph& g, int size_cap = 16) {
    if (g.n > size_cap) throw CapExceeded("bipartite_obstruction: size cap exceeded");
    if (is_bipartite(g)) return 0;
    const std::uint64_t total = std::uint64_t{1} << g.n;
    for (int size = 1; size < g.n; ++size) {
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (__builtin_popcountll(mask) != size) continue;
            if (is_bipartite(delete_vertices_mask(g, mask))) return size;
        }
    }
    return g.n;  // unreachable for simple graphs
}
inline int bipartite_obstruction(const GainGraph& g, int size_cap = 16) {
    return bipartite_obstruction(g.underlying(), size_cap);
}

inline bool is_acyclic(const SimpleGraph& g) {
    // A forest has |E| = |V'| - (#components) over non-isolated vertices;
    // simpler: DFS back-edge test.
    std::vector<int> parent(g.n, -2);
    for (int s = 0; s < g.n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u) {
                if (!g.has_edge(v, u) || u == parent[v]) continue;
                if (parent[u] != -2) return false;
                parent[u] = v;
                stack.push_back(u);
            }
        }
    }
    return true;
}

/// Exact matching number of a forest: repeatedly match a leaf to its support.
inline int forest_matching_number(SimpleGraph g) {
    int m = 0;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) == 1) {
                const int u = __builtin_ctzll(g.adj[v]);
                for (int t = 0; t < g.n; ++t) {
                    g.adj[t] &= ~((std::uint64_t{1} << v) | (std::uint64_t{1} << u));
                }
                g.adj[v] = g.adj[u] = 0;
                ++m;
                progressed = true;
            }
        }
    }
    return m;
}

/// max over proper vertex subsets V0 with G-V0 acyclic of mu(G-V0).
/// The empty set participates whenever G itself is acyclic.
inline int max_acyclic_deletion_matching(const SimpleGraph& g, int size_cap = 16) {
    if (g.n > size_cap)
        throw CapExceeded("max_acyclic_deletion_matching: size cap exceeded");
    const std::uint64_t total = std::uint64_t{1} << g.n;
    int best = 0;
    for (std::uint64_t drop = 0; drop + 1 < total; ++drop) {  // proper subsets only
        SimpleGraph h = delete_vertices_mask(g, drop);
        if (!is_acyclic(h)) continue;
        best = std::max(best, forest_matching_number(h));
    }
    return best;
}
inline int max_acyclic_deletion_matching(const GainGraph& g, int size_cap = 16) {
    return max_acyclic_deletion_matching(g.underlying(), size_cap);
}

// ---------------------------------------------------------------------------
// Fundamental cycles, balance, switching equivalence
// ---------------------------------------------------------------------------

struct FundamentalCycleBasis {
    std::vector<EdgeKey> tree_edges;
    std::vector<std::vector<int>> cycles;  // vertex sequences, closing edge implied
    std::vector<UnitComplex> gains;        // canonical-direction gains
};

/// Spanning forest = depth-first tree rooted at the lowest-index vertex of
/// each component, children visited in ascending index. One cycle per
/// non-tree edge, traversed from its lower-index endpoint along the tree
/// path and closed by the non-tree edge.
inline FundamentalCycleBasis fundamental_cycles(const GainGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(n, -2), depth(n, 0);
    std::vector<EdgeKey> tree_edges;
    std::vector<int> non_tree;

    std::vector<char> edge_in_tree(g.edge_count(), 0);
    for (int root = 0; root < n; ++root) {
        if (parent[root] != -2) continue;
        parent[root] = -1;
        // Explicit stack DFS that still visits neighbors ascending.
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto& [v, it] = stack.back();
            if (it >= g.neighbors(v).size()) { stack.pop_back(); continue; }
            const auto [u, eidx] = g.neighbors(v)[it++];
            if (parent[u] == -2) {
                parent[u] = v;
                depth[u] = depth[v] + 1;
                edge_in_tree[eidx] = 1;
                tree_edges.push_back({std::min(u, v), std::max(u, v)});
                stack.push_back({u, 0});
            }
        }
    }
    for (int idx = 0; idx < g.edge_count(); ++idx)
        if (!edge_in_tree[idx]) non_tree.push_back(idx);

    FundamentalCycleBasis basis;
    basis.tree_edges = std::move(tree_edges);
    for (int idx : non_tree) {
        const GainEdge& e = g.edges()[idx];
        // Tree path from e.p (lower endpoint) to e.q.
        std::vector<int> up_a, up_b;
        int a = e.p, b = e.q;
        while (depth[a] > depth[b]) { up_a.push_back(a); a = parent[a]; }
        while (depth[b] > depth[a]) { up_b.push_back(b); b = parent[b]; }
        while (a != b) {
            up_a.push_back(a);
            up_b.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        std::vector<int> cycle = up_a;
        cycle.push_back(a);
        for (auto rit = up_b.rbegin(); rit != up_b.rend(); ++rit) cycle.push_back(*rit);
        // cycle: e.p ... e.q along the tree; closing edge e.q -> e.p.
        std::vector<int> walk = cycle;
        walk.push_back(e.p);
        basis.cycles.push_back(std::move(cycle));
        basis.gains.push_back(gain_of_walk(g, walk));
    }
    return basis;
}

inline bool is_balanced(const GainGraph& g) {
    const auto basis = fundamental_cycles(g);
    for (const auto& gain : basis.gains)
        if (gain.distance(UnitComplex::one()) > kGainTol) return false;
    return true;
}

inline bool is_antibalanced(const GainGraph& g) { return is_balanced(negate(g)); }

inline bool switching_equivalent(const GainGraph& g1, const GainGraph& g2) {
    if (!g1.same_underlying(g2))
        throw std::invalid_argument("switching_equivalent: underlying graphs differ");
    const auto b1 = fundamental_cycles(g1);
    const auto b2 = fundamental_cycles(g2);
    for (std::size_t j = 0; j < b1.gains.size(); ++j)
        if (b1.gains[j].distance(b2.gains[j]) > kGainTol) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Structural classification
// ---------------------------------------------------------------------------

struct ComponentClass {
    std::vector<int> vertices;
    bool is_isolated_vertex = false;
    bool is_complete_bipartite = false;
    int part_p = 0, part_q = 0;  // valid when is_complete_bipartite
    bool has_perfect_matching = false;
    bool is_balanced = false;
    bool is_star = false;  // K_{1,k}, k >= 1
    int star_leaves = 0;
};

struct StructuralClass {
    std::vector<ComponentClass> component_classes;
    bool equality_class_matching = false;  // all non-trivial: balanced K_{p,p}
    bool equality_class_cover = false;     // all non-trivial: balanced K_{1,Delta(G)}
};

inline StructuralClass structural_class(const GainGraph& g) {
    StructuralClass out;
    const SimpleGraph under = g.underlying();
    const auto comps = components(under);
    const int delta = g.max_degree();

    bool all_matching_class = true, all_cover_class = true;
    for (const auto& comp : comps) {
        ComponentClass cc;
        cc.vertices = comp;
        const auto sub = induced_subgraph(g, comp);
        const SimpleGraph sg = sub.graph.underlying();
        cc.is_isolated_vertex = (sg.n == 1);
        if (auto parts = complete_bipartite_parts(sg)) {
            cc.is_complete_bipartite = true;
            cc.part_p = parts->first;
            cc.part_q = parts->second;
        }
        cc.has_perfect_matching = (sg.n % 2 == 0) && (matching_number(sg) * 2 == sg.n);
        cc.is_balanced = is_balanced(sub.graph);
        cc.is_star = cc.is_complete_bipartite && cc.part_p == 1;
        cc.star_leaves = cc.is_star ? cc.part_q : 0;

        if (!cc.is_isolated_vertex) {
            if (!(cc.is_complete_bipartite && cc.part_p == cc.part_q && cc.is_balanced))
                all_matching_class = false;
            if (!(cc.is_star && cc.star_leaves == delta && cc.is_balanced))
                all_cover_class = false;
        }
        out.component_classes.push_back(std::move(cc));
    }
    // Edgeless graphs land in both classes vacuously (tau = mu = 0, energy 0).
    out.equality_class_matching = all_matching_class;
    out.equality_class_cover = all_cover_class;
    return out;
}

struct CombinatorialProfile {
    int matching_number = 0;
    int vertex_cover_number = 0;
    int odd_cycle_count = 0;
    int bipartite_obstruction = 0;
    bool is_bipartite = false;
    std::vector<std::vector<int>> components;
};

inline CombinatorialProfile combinatorial_profile(const GainGraph& g) {
    const SimpleGraph under = g.underlying();
    CombinatorialProfile p;
    p.matching_number = matching_number(under);
    p.vertex_cover_number = vertex_cover_number(under);
    p.odd_cycle_count = odd_cycle_count(under);
    p.bipartite_obstruction = bipartite_obstruction(under);
    p.is_bipartite = is_bipartite(under);
    p.components = components(under);
    return p;
}

}  // namespace gainspec

#endif
