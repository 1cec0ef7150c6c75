#ifndef GAINSPEC_GAIN_GRAPH_HPP
#define GAINSPEC_GAIN_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gainspec/unit_complex.hpp"

namespace gainspec {

/// Plain simple graph, used for underlying graphs, enumeration and the
/// ungained factor of Kronecker products. Adjacency kept as bitmask rows,
/// which caps n at 64 (well above every cap in this library).
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] bit u set iff v ~ u

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_), adj(n_, 0) {
        if (n_ < 0 || n_ > 64) throw std::invalid_argument("SimpleGraph: bad n");
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("SimpleGraph: loop");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("SimpleGraph: vertex out of range");
        adj[u] |= (std::uint64_t{1} << v);
        adj[v] |= (std::uint64_t{1} << u);
    }

    bool has_edge(int u, int v) const {
        return (adj[u] >> v) & 1;
    }

    int degree(int v) const { return __builtin_popcountll(adj[v]); }

    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
};

/// One stored edge of a gain graph: endpoints p < q, gain interpreted as
/// the gain of the orientation p -> q. The opposite orientation carries
/// the conjugate.
struct GainEdge {
    int p;
    int q;
    UnitComplex gain;
};

/// Complex unit gain graph: a simple graph plus a consistent gain map.
/// Immutable after construction; all transformations return new values.
class GainGraph {
public:
    GainGraph() = default;

    GainGraph(int n, std::vector<GainEdge> edges) : n_(n) {
        if (n < 0) throw std::invalid_argument("GainGraph: negative n");
        for (auto& e : edges) {
            if (e.p == e.q) throw std::invalid_argument("GainGraph: loop");
            if (e.p > e.q) {  // canonical low -> high orientation
                std::swap(e.p, e.q);
                e.gain = e.gain.conj();
            }
            if (e.p < 0 || e.q >= n)
                throw std::invalid_argument("GainGraph: vertex out of range");
        }
        std::sort(edges.begin(), edges.end(), [](const GainEdge& a, const GainEdge& b) {
            return std::make_pair(a.p, a.q) < std::make_pair(b.p, b.q);
        });
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i - 1].p == edges[i].p && edges[i - 1].q == edges[i].q)
                throw std::invalid_argument("GainGraph: duplicate edge");
        edges_ = std::move(edges);
        adj_.assign(n_, {});
        for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
            adj_[edges_[idx].p].push_back({edges_[idx].q, idx});
            adj_[edges_[idx].q].push_back({edges_[idx].p, idx});
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<GainEdge>& edges() const { return edges_; }

    /// Sorted (neighbor, edge index) pairs for a vertex.
    const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_.at(v); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool has_edge(int u, int v) const { return find_edge(u, v) >= 0; }

    int find_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
        for (const auto& [w, idx] : adj_[u])
            if (w == v) return idx;
        return -1;
    }

    /// Gain of the orientation from -> to; throws if the edge is absent.
    UnitComplex gain_directed(int from, int to) const {
        int idx = find_edge(from, to);
        if (idx < 0) throw std::invalid_argument("GainGraph: no such edge");
        const GainEdge& e = edges_[idx];
        return (from == e.p) ? e.gain : e.gain.conj();
    }

    SimpleGraph underlying() const {
        SimpleGraph g(n_);
        for (const auto& e : edges_) g.add_edge(e.p, e.q);
        return g;
    }

    bool same_underlying(const GainGraph& o) const {
        if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].p != o.edges_[i].p || edges_[i].q != o.edges_[i].q) return false;
        return true;
    }

    bool approx_equal(const GainGraph& o, double tol) const {
        if (!same_underlying(o)) return false;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].gain.distance(o.edges_[i].gain) > tol) return false;
        return true;
    }

private:
    int n_ = 0;
    std::vector<GainEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Diagonal of a switching unitary: one unit value per vertex.
struct SwitchingFunction {
    std::vector<UnitComplex> values;

    explicit SwitchingFunction(std::vector<UnitComplex> v) : values(std::move(v)) {}
    static SwitchingFunction identity(int n) {
        return SwitchingFunction(std::vector<UnitComplex>(n, UnitComplex::one()));
    }
    int size() const { return static_cast<int>(values.size()); }
};

/// gain'(p->q) = s[p] * gain(p->q) * conj(s[q]); the underlying graph is
/// unchanged and every cycle gain is invariant.
inline GainGraph switch_gains(const GainGraph& g, const SwitchingFunction& s) {
    if (s.size() != g.vertex_count())
        throw std::invalid_argument("switch_gains: switching function length mismatch");
    std::vector<GainEdge> edges = g.edges();
    for (auto& e : edges)
        e.gain = (s.values[e.p] * e.gain * s.values[e.q].conj()).normalized();
    return GainGraph(g.vertex_count(), std::move(edges));
}

inline GainGraph negate(const GainGraph& g) {
    std::vector<GainEdge> edges = g.edges();
    for (auto& e : edges) e.gain = e.gain.negated();
    return GainGraph(g.vertex_count(), std::move(edges));
}

struct InducedSubgraph {
    GainGraph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<int> new_to_old;
};

inline InducedSubgraph induced_subgraph(const GainGraph& g, const std::vector<int>& keep) {
    std::vector<int> old_to_new(g.vertex_count(), -1);
    std::vector<int> sorted_keep = keep;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    sorted_keep.erase(std::unique(sorted_keep.begin(), sorted_keep.end()), sorted_keep.end());
    std::vector<int> new_to_old;
    for (int v : sorted_keep) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        old_to_new[v] = static_cast<int>(new_to_old.size());
        new_to_old.push_back(v);
    }
    std::vector<GainEdge> edges;
    for (const auto& e : g.edges())
        if (old_to_new[e.p] >= 0 && old_to_new[e.q] >= 0)
            edges.push_back({old_to_new[e.p], old_to_new[e.q], e.gain});
    return {GainGraph(static_cast<int>(new_to_old.size()), std::move(edges)),
            std::move(old_to_new), std::move(new_to_old)};
}

/// Edge identified by its endpoint pair (low, high).
using EdgeKey = std::pair<int, int>;

inline GainGraph delete_edges(const GainGraph& g, const std::vector<EdgeKey>& cut) {
    std::set<EdgeKey> drop;
    for (auto [u, v] : cut) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v))
            throw std::invalid_argument("delete_edges: unknown edge");
        drop.insert({u, v});
    }
    std::vector<GainEdge> edges;
    for (const auto& e : g.edges())
        if (!drop.count({e.p, e.q})) edges.push_back(e);
    return GainGraph(g.vertex_count(), std::move(edges));
}

/// Edges with exactly one endpoint in `part`.
inline std::vector<EdgeKey> cut_set_between(const GainGraph& g, const std::vector<int>& part) {
    std::vector<char> in(g.vertex_count(), 0);
    int cnt = 0;
    for (int v : part) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("cut_set_between: vertex out of range");
        if (!in[v]) { in[v] = 1; ++cnt; }
    }
    if (cnt == 0 || cnt == g.vertex_count())
        throw std::invalid_argument("cut_set_between: part must be a nonempty proper subset");
    std::vector<EdgeKey> cut;
    for (const auto& e : g.edges())
        if (in[e.p] != in[e.q]) cut.push_back({e.p, e.q});
    return cut;
}

/// Ordered product of directed gains along a walk. For a closed walk this
/// is the cycle gain.
inline UnitComplex gain_of_walk(const GainGraph& g, const std::vector<int>& walk) {
    GainProduct prod;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        prod.multiply(g.gain_directed(walk[i], walk[i + 1]));
    return prod.result();
}

/// Kronecker product with a simple graph: vertex (p,q) -> p*|V(h)|+q,
/// edge iff adjacent in both factors, gain inherited from the gain factor.
inline GainGraph kronecker_with_simple(const GainGraph& g, const SimpleGraph& h) {
    const int t = h.n;
    std::vector<GainEdge> edges;
    for (const auto& e : g.edges()) {
        for (auto [a, b] : h.edges()) {
            // (p,a)-(q,b) with gain phi(p->q), and (p,b)-(q,a) likewise
            edges.push_back({e.p * t + a, e.q * t + b, e.gain});
            edges.push_back({e.p * t + b, e.q * t + a, e.gain});
        }
    }
    return GainGraph(g.vertex_count() * t, std::move(edges));
}

inline GainGraph bipartite_double(const GainGraph& g) {
    SimpleGraph k2(2);
    k2.add_edge(0, 1);
    return kronecker_with_simple(g, k2);
}

}  // namespace gainspec

#endif
