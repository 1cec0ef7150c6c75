// Independent oracles used only by tests: brute-force enumerations and an
// alternative |A| computation. Deliberately naive implementations that share
// no code paths with the library algorithms they check.
#ifndef GAINSPEC_TESTS_ORACLES_HPP
#define GAINSPEC_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>
#include <vector>

#include "gainspec/gain_graph.hpp"
#include "gainspec/hermitian.hpp"

namespace oracle {

using gainspec::GainGraph;
using gainspec::SimpleGraph;

/// Sum of gains over every directed k-walk p -> p, by explicit enumeration.
inline std::complex<double> walk_gain_brute(const GainGraph& g, int k, int p) {
    std::complex<double> total = 0.0;
    std::vector<int> walk{p};
    auto recurse = [&](auto&& self, int at, int left) -> void {
        if (left == 0) {
            if (at != p) return;
            std::complex<double> prod = 1.0;
            for (std::size_t i = 0; i + 1 < walk.size(); ++i)
                prod *= g.gain_directed(walk[i], walk[i + 1]).value();
            total += prod;
            return;
        }
        for (const auto& [u, idx] : g.neighbors(at)) {
            walk.push_back(u);
            self(self, u, left - 1);
            walk.pop_back();
        }
    };
    if (k == 0) return 1.0;
    recurse(recurse, p, k);
    return total;
}

/// Maximum matching by trying, for the first unsaturated vertex, every
/// partner and also leaving it unmatched.
inline int matching_brute(const SimpleGraph& g) {
    std::vector<char> used(g.n, 0);
    auto recurse = [&](auto&& self, int v) -> int {
        while (v < g.n && used[v]) ++v;
        if (v >= g.n) return 0;
        used[v] = 1;
        int best = self(self, v + 1);  // leave v unmatched
        for (int u = v + 1; u < g.n; ++u) {
            if (used[u] || !g.has_edge(v, u)) continue;
            used[u] = 1;
            best = std::max(best, 1 + self(self, v + 1));
            used[u] = 0;
        }
        used[v] = 0;
        return best;
    };
    return recurse(recurse, 0);
}

/// Minimum vertex cover by checking every subset, smallest first.
inline int vertex_cover_brute(const SimpleGraph& g) {
    const auto edges = g.edges();
    for (int size = 0; size <= g.n; ++size) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask) {
            if (__builtin_popcountll(mask) != size) continue;
            bool covers = true;
            for (auto [u, v] : edges)
                if (!((mask >> u) & 1) && !((mask >> v) & 1)) { covers = false; break; }
            if (covers) return size;
        }
    }
    return g.n;
}

/// Simple-cycle count by enumerating vertex sequences: for each subset
/// size >= 3, all arrangements, deduplicated by rotation/reflection via a
/// canonical starting point and direction.
inline std::pair<int, int> cycle_counts_brute(const SimpleGraph& g) {
    int odd = 0, even = 0;
    std::vector<int> seq;
    std::vector<char> in(g.n, 0);
    auto recurse = [&](auto&& self) -> void {
        const int len = static_cast<int>(seq.size());
        if (len >= 3 && g.has_edge(seq.back(), seq[0]) && seq[1] < seq.back()) {
            // seq[0] is the smallest vertex and seq[1] < seq.back() fixes a
            // direction, so each cycle is counted exactly once.
            (len % 2 ? odd : even) += 1;
        }
        for (int u = seq[0] + 1; u < g.n; ++u) {
            if (in[u] || !g.has_edge(seq.back(), u)) continue;
            in[u] = 1;
            seq.push_back(u);
            self(self);
            seq.pop_back();
            in[u] = 0;
        }
    };
    for (int s = 0; s < g.n; ++s) {
        seq.assign(1, s);
        std::fill(in.begin(), in.end(), 0);
        in[s] = 1;
        recurse(recurse);
    }
    return {odd, even};
}

// --- dense complex linear algebra for the |A| oracle ---

using CMat = std::vector<std::vector<std::complex<double>>>;

inline CMat identity(int n) {
    CMat m(n, std::vector<std::complex<double>>(n, 0.0));
    for (int i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline CMat mul(const CMat& a, const CMat& b) {
    const int n = static_cast<int>(a.size());
    CMat c(n, std::vector<std::complex<double>>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline CMat inverse(CMat a) {
    const int n = static_cast<int>(a.size());
    CMat inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-300) throw std::runtime_error("oracle: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        const std::complex<double> d = a[col][col];
        for (int j = 0; j < n; ++j) { a[col][j] /= d; inv[col][j] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const std::complex<double> f = a[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) { a[r][j] -= f * a[col][j]; inv[r][j] -= f * inv[col][j]; }
        }
    }
    return inv;
}

/// Diagonal of |A| = sqrt(A^2), via Denman-Beavers iteration on A^2 + eps I.
/// The eps shift keeps the iteration nonsingular and perturbs each
/// eigenvalue by at most sqrt(eps), so compare within ~n * sqrt(eps).
inline std::vector<double> abs_diagonal_oracle(const gainspec::HermitianMatrix& h,
                                               double eps = 1e-12) {
    const int n = h.dim();
    CMat a(n, std::vector<std::complex<double>>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = h.at(i, j);
    CMat y = mul(a, a);
    for (int i = 0; i < n; ++i) y[i][i] += eps;
    CMat z = identity(n);
    for (int it = 0; it < 100; ++it) {
        const CMat yi = inverse(y), zi = inverse(z);
        CMat yn(n, std::vector<std::complex<double>>(n));
        CMat zn(n, std::vector<std::complex<double>>(n));
        double delta = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                yn[i][j] = 0.5 * (y[i][j] + zi[i][j]);
                zn[i][j] = 0.5 * (z[i][j] + yi[i][j]);
                delta = std::max(delta, std::abs(yn[i][j] - y[i][j]));
            }
        }
        y = std::move(yn);
        z = std::move(zn);
        if (delta < 1e-14) break;
    }
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = y[i][i].real();
    return diag;
}

/// Closed-form spectra, sorted descending.
inline std::vector<double> cycle_spectrum(int n, double theta) {
    std::vector<double> s;
    for (int j = 0; j < n; ++j)
        s.push_back(2.0 * std::cos((theta + 2.0 * std::numbers::pi * j) / n));
    std::sort(s.rbegin(), s.rend());
    return s;
}

inline std::vector<double> complete_spectrum(int n) {
    std::vector<double> s(n, -1.0);
    s[0] = n - 1.0;
    return s;
}

inline std::vector<double> complete_bipartite_spectrum(int p, int q) {
    std::vector<double> s(p + q, 0.0);
    s[0] = std::sqrt(static_cast<double>(p) * q);
    s[p + q - 1] = -s[0];
    return s;
}

}  // namespace oracle

#endif
