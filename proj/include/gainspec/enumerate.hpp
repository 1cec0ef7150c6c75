#ifndef GAINSPEC_ENUMERATE_HPP
#define GAINSPEC_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "gainspec/combinatorics.hpp"
#include "gainspec/gain_graph.hpp"

namespace gainspec {

namespace detail {

/// Upper-triangle bitstring of g under the permutation new_label -> old
/// vertex; pair (i,j), i<j in new labels, in row-major order.
inline std::uint64_t code_under(const SimpleGraph& g, const std::vector<int>& perm) {
    std::uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j, ++bit)
            if (g.has_edge(perm[i], perm[j])) code |= (std::uint64_t{1} << bit);
    return code;
}

/// Equitable coloring by iterated neighbor-color refinement (1-dim WL).
/// Color ids are dense and label-invariant: assigned by sorted signature.
inline std::vector<int> wl_colors(const SimpleGraph& g) {
    std::vector<int> color(g.n);
    for (int v = 0; v < g.n; ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s{color[v]};
            for (int u = 0; u < g.n; ++u)
                if (g.has_edge(v, u)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> id;
        for (const auto& [s, v] : sig) id.emplace(s, 0);
        int next = 0;
        for (auto& [s, i] : id) i = next++;
        std::vector<int> fresh(g.n);
        for (int v = 0; v < g.n; ++v) fresh[v] = id[sig[v].first];
        if (fresh == color) break;
        color = std::move(fresh);
    }
    return color;
}

}  // namespace detail

/// Canonical form of a simple graph (n <= 11): the minimum upper-triangle
/// bitstring over all labelings that respect the equitable coloring. Two
/// graphs are isomorphic iff their codes (and n) agree.
inline std::uint64_t canonical_code(const SimpleGraph& g) {
    if (g.n > 11) throw std::invalid_argument("canonical_code: n must be <= 11");
    if (g.n <= 1) return 0;
    const std::vector<int> color = detail::wl_colors(g);
    // Vertices grouped by color, ascending; permutations permute within groups.
    std::vector<int> perm(g.n);
    for (int v = 0; v < g.n; ++v) perm[v] = v;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
        if (color[a] != color[b]) return color[a] < color[b];
        return a < b;
    });
    std::vector<std::pair<int, int>> groups;  // [begin, end) in perm
    for (int b = 0; b < g.n;) {
        int e = b + 1;
        while (e < g.n && color[perm[e]] == color[perm[b]]) ++e;
        groups.emplace_back(b, e);
        b = e;
    }
    std::uint64_t best = ~std::uint64_t{0};
    // Nested next_permutation over the groups, earliest group outermost.
    std::vector<std::vector<int>> cells;
    for (auto [b, e] : groups) cells.emplace_back(perm.begin() + b, perm.begin() + e);
    std::vector<int> assembled(g.n);
    auto recurse = [&](auto&& self, std::size_t ci, int at) -> void {
        if (ci == cells.size()) {
            best = std::min(best, detail::code_under(g, assembled));
            return;
        }
        std::vector<int>& cell = cells[ci];
        std::sort(cell.begin(), cell.end());
        do {
            std::copy(cell.begin(), cell.end(), assembled.begin() + at);
            self(self, ci + 1, at + static_cast<int>(cell.size()));
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    recurse(recurse, 0, 0);
    return best;
}

inline bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n == b.n && canonical_code(a) == canonical_code(b);
}

struct CorpusSpec {
    int n_min = 1;
    int n_max = 7;
    bool connected_only = true;
    bool bipartite_only = false;
};

/// All simple graphs up to isomorphism for each n in [1, n_max], by
/// level-wise augmentation: every graph on k+1 vertices arises from some
/// graph on k vertices by adding a vertex, deduplicated by canonical code.
/// Returns one representative per class, n <= 9.
inline std::vector<SimpleGraph> enumerate_all_graphs(int n_max) {
    if (n_max < 1) throw std::invalid_argument("enumerate_all_graphs: n_max must be >= 1");
    if (n_max > 9) throw CapExceeded("enumerate_all_graphs: n_max cap is 9");
    std::vector<SimpleGraph> out;
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    out.push_back(level[0]);
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::uint64_t> seen;
        std::vector<SimpleGraph> next;
        for (const SimpleGraph& parent : level) {
            for (std::uint64_t nbhd = 0; nbhd < (std::uint64_t{1} << (n - 1)); ++nbhd) {
                SimpleGraph child(n);
                for (auto [u, v] : parent.edges()) child.add_edge(u, v);
                for (int u = 0; u < n - 1; ++u)
                    if ((nbhd >> u) & 1) child.add_edge(u, n - 1);
                if (seen.insert(canonical_code(child)).second) next.push_back(std::move(child));
            }
        }
        level = std::move(next);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

/// Representatives matching the corpus filters, grouped by ascending n.
inline std::vector<SimpleGraph> enumerate_underlying(const CorpusSpec& spec) {
    if (spec.n_min < 1 || spec.n_min > spec.n_max)
        throw std::invalid_argument("enumerate_underlying: bad n range");
    if (spec.n_max > 9) throw CapExceeded("enumerate_underlying: n_max cap is 9");
    std::vector<SimpleGraph> out;
    for (const SimpleGraph& g : enumerate_all_graphs(spec.n_max)) {
        if (g.n < spec.n_min) continue;
        if (spec.connected_only && !is_connected(g)) continue;
        if (spec.bipartite_only && !is_bipartite(g)) continue;
        out.push_back(g);
    }
    return out;
}

}  // namespace gainspec

#endif
