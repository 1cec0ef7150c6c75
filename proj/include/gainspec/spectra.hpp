#ifndef GAINSPEC_SPECTRA_HPP
#define GAINSPEC_SPECTRA_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "gainspec/eigen.hpp"
#include "gainspec/gain_graph.hpp"
#include "gainspec/hermitian.hpp"

namespace gainspec {

/// Eigenvalues within this of zero count as zero for rank and sign counts.
inline double rank_tolerance(int n, double spectral_radius) {
    return std::max(1e-10, n * spectral_radius * 1e-10);
}

inline int numerical_rank(const SpectralDecomposition& d) {
    const double tol = rank_tolerance(static_cast<int>(d.eigenvalues.size()), d.spectral_radius());
    int r = 0;
    for (double l : d.eigenvalues)
        if (std::abs(l) > tol) ++r;
    return r;
}

inline int numerical_rank(const HermitianMatrix& m) { return numerical_rank(eigendecompose(m)); }

inline int positive_eigenvalue_count(const SpectralDecomposition& d) {
    const double tol = rank_tolerance(static_cast<int>(d.eigenvalues.size()), d.spectral_radius());
    int r = 0;
    for (double l : d.eigenvalues)
        if (l > tol) ++r;
    return r;
}

inline int positive_eigenvalue_count(const GainGraph& g) {
    return positive_eigenvalue_count(eigendecompose(adjacency(g)));
}

inline double energy(const SpectralDecomposition& d) {
    double e = 0.0;
    for (double l : d.eigenvalues) e += std::abs(l);
    return e;
}

inline double energy(const GainGraph& g) { return energy(eigendecompose(adjacency(g))); }

/// Vertex energies from the eigenpair formula: E(v_i) = sum_j |q_ij|^2 |lambda_j|.
inline std::vector<double> vertex_energy(const SpectralDecomposition& d) {
    const int n = static_cast<int>(d.eigenvalues.size());
    std::vector<double> e(n, 0.0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            e[i] += std::norm(d.eigenvectors[j][i]) * std::abs(d.eigenvalues[j]);
    return e;
}

inline std::vector<double> vertex_energy(const GainGraph& g) {
    return vertex_energy(eigendecompose(adjacency(g)));
}

/// Diagonal entry p of |A|^power, spectrally: sum_j |q_pj|^2 |lambda_j|^power.
inline double abs_power_diagonal(const SpectralDecomposition& d, int p, double power) {
    double s = 0.0;
    for (std::size_t j = 0; j < d.eigenvalues.size(); ++j) {
        const double al = std::abs(d.eigenvalues[j]);
        if (al == 0.0 && power == 0.0) { s += std::norm(d.eigenvectors[j][p]); continue; }
        if (al == 0.0) continue;
        s += std::norm(d.eigenvectors[j][p]) * std::pow(al, power);
    }
    return s;
}

struct EnergyProfile {
    double total = 0.0;
    std::vector<double> per_vertex;
    double spectral_radius = 0.0;
    int positive_count = 0;
    int rank = 0;
};

inline EnergyProfile energy_profile(const SpectralDecomposition& d) {
    EnergyProfile p;
    p.total = energy(d);
    p.per_vertex = vertex_energy(d);
    p.spectral_radius = d.spectral_radius();
    p.positive_count = positive_eigenvalue_count(d);
    p.rank = numerical_rank(d);
    return p;
}

inline EnergyProfile energy_profile(const GainGraph& g) {
    return energy_profile(eigendecompose(adjacency(g)));
}

/// Real part of (A^k)_pp: the sum of gains of directed k-walks p -> p.
/// Computed by k matrix-vector applications; the diagonal of a Hermitian
/// power is real, asserted within 1e-10.
inline double walk_gain_sum(const GainGraph& g, int k, int p) {
    if (k < 0) throw std::invalid_argument("walk_gain_sum: negative k");
    if (p < 0 || p >= g.vertex_count())
        throw std::invalid_argument("walk_gain_sum: vertex out of range");
    if (k == 0) return 1.0;
    const HermitianMatrix a = adjacency(g);
    std::vector<std::complex<double>> x(g.vertex_count(), 0.0);
    x[p] = 1.0;
    for (int step = 0; step < k; ++step) x = a.multiply(x);
    if (std::abs(x[p].imag()) > 1e-10)
        throw std::runtime_error("walk_gain_sum: diagonal not real");
    return x[p].real();
}

/// Sum of singular values of a general complex square matrix, via the
/// Hermitian embedding [[0, C], [C*, 0]] whose spectrum is {+-sigma_i}.
inline double singular_value_sum(const std::vector<std::vector<std::complex<double>>>& c) {
    const int n = static_cast<int>(c.size());
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("singular_value_sum: matrix must be square");
    HermitianMatrix m(2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m.set_pair(i, j + n, c[i][j]);
    }
    const auto d = eigendecompose(m);
    double s = 0.0;
    for (double l : d.eigenvalues) s += std::abs(l);
    return 0.5 * s;
}

}  // namespace gainspec

#endif
