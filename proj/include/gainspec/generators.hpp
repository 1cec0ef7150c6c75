#ifndef GAINSPEC_GENERATORS_HPP
#define GAINSPEC_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

enum class GainScheme {
    AllOne,
    AllMinusOne,
    GaussianSet,     // gains drawn from {1, i, -i}
    UniformCircle,   // gains e^{i theta}, theta uniform in [0, 2 pi)
};

namespace detail {

/// Deterministic uniform double in [0, 1): top 53 bits of the generator
/// output, identical across platforms (no distribution objects).
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Cycle C_n with total gain e^{i theta} along the directed walk
/// 0 -> 1 -> ... -> n-1 -> 0. Path edges carry gain 1; the closing edge,
/// stored as (0, n-1), carries e^{-i theta} so the walk direction n-1 -> 0
/// contributes e^{i theta}.
inline GainGraph make_cycle(int n, double theta) {
    if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
    std::vector<GainEdge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, UnitComplex::one()});
    edges.push_back({0, n - 1, UnitComplex::from_angle(-theta)});
    return GainGraph(n, std::move(edges));
}

/// K_{p,q} with all gains 1: parts {0..p-1} and {p..p+q-1}.
inline GainGraph make_complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("make_complete_bipartite: parts must be >= 1");
    std::vector<GainEdge> edges;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < q; ++b) edges.push_back({a, p + b, UnitComplex::one()});
    return GainGraph(p + q, std::move(edges));
}

/// K_n with all gains 1.
inline GainGraph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("make_complete: n must be >= 1");
    std::vector<GainEdge> edges;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) edges.push_back({p, q, UnitComplex::one()});
    return GainGraph(n, std::move(edges));
}

/// Star K_{1,r}, center 0, all gains 1.
inline GainGraph make_star(int r) {
    if (r < 1) throw std::invalid_argument("make_star: r must be >= 1");
    std::vector<GainEdge> edges;
    for (int v = 1; v <= r; ++v) edges.push_back({0, v, UnitComplex::one()});
    return GainGraph(r + 1, std::move(edges));
}

/// Path P_n, all gains 1.
inline GainGraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("make_path: n must be >= 1");
    std::vector<GainEdge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, UnitComplex::one()});
    return GainGraph(n, std::move(edges));
}

/// Fixed 6-vertex bipartite witness graph with matching number 3 that is not
/// complete bipartite; its energy strictly exceeds 2*mu for every gain
/// assignment. Vertices 0..5, all gains 1.
inline GainGraph make_figure_graph() {
    std::vector<GainEdge> edges = {
        {0, 1, UnitComplex::one()}, {2, 3, UnitComplex::one()},
        {0, 3, UnitComplex::one()}, {1, 4, UnitComplex::one()},
        {0, 5, UnitComplex::one()}, {4, 5, UnitComplex::one()},
    };
    return GainGraph(6, std::move(edges));
}

/// Replaces each gain per the scheme, deterministically from the seed.
/// Edges are visited in the graph's canonical sorted order, so the same
/// (graph, scheme, seed) always yields the same gains.
inline GainGraph assign_gains(const GainGraph& g, GainScheme scheme, std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    std::vector<GainEdge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        UnitComplex gain = UnitComplex::one();
        switch (scheme) {
            case GainScheme::AllOne: gain = UnitComplex::one(); break;
            case GainScheme::AllMinusOne: gain = UnitComplex::minus_one(); break;
            case GainScheme::GaussianSet: {
                const int pick = static_cast<int>(rng() % 3);
                gain = pick == 0   ? UnitComplex::one()
                       : pick == 1 ? UnitComplex::i()
                                   : UnitComplex::minus_i();
                break;
            }
            case GainScheme::UniformCircle:
                gain = UnitComplex::from_angle(2.0 * std::numbers::pi * detail::uniform01(rng));
                break;
        }
        edges.push_back({e.p, e.q, gain});
    }
    return GainGraph(g.vertex_count(), std::move(edges));
}

/// Same underlying graph with gains drawn uniformly from the unit circle.
inline GainGraph random_gains(const GainGraph& g, std::uint64_t seed) {
    return assign_gains(g, GainScheme::UniformCircle, seed);
}

}  // namespace gainspec

#endif
