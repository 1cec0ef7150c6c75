#ifndef GAINSPEC_HERMITIAN_HPP
#define GAINSPEC_HERMITIAN_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "gainspec/gain_graph.hpp"

namespace gainspec {

/// Dense Hermitian matrix, row-major. entry(p,q) == conj(entry(q,p)) holds
/// exactly by construction through set_pair/set_diagonal.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {
        if (n < 0) throw std::invalid_argument("HermitianMatrix: negative n");
    }

    int dim() const { return n_; }

    std::complex<double> at(int p, int q) const { return a_[idx(p, q)]; }

    void set_pair(int p, int q, std::complex<double> z) {
        if (p == q) throw std::invalid_argument("HermitianMatrix: use set_diagonal");
        a_[idx(p, q)] = z;
        a_[idx(q, p)] = std::conj(z);
    }

    void set_diagonal(int p, double x) { a_[idx(p, p)] = x; }

    /// Largest asymmetry |a_pq - conj(a_qp)|; zero for matrices built
    /// through the mutators, nonzero only for hand-assembled data.
    double hermitian_defect() const {
        double d = 0.0;
        for (int p = 0; p < n_; ++p)
            for (int q = p; q < n_; ++q)
                d = std::max(d, std::abs(a_[idx(p, q)] - std::conj(a_[idx(q, p)])));
        return d;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& z : a_) s += std::norm(z);
        return std::sqrt(s);
    }

    std::vector<std::complex<double>> multiply(const std::vector<std::complex<double>>& x) const {
        std::vector<std::complex<double>> y(n_, 0.0);
        for (int p = 0; p < n_; ++p)
            for (int q = 0; q < n_; ++q)
                y[p] += a_[idx(p, q)] * x[q];
        return y;
    }

private:
    std::size_t idx(int p, int q) const { return static_cast<std::size_t>(p) * n_ + q; }
    int n_ = 0;
    std::vector<std::complex<double>> a_;
};

/// Hermitian adjacency matrix of a gain graph.
inline HermitianMatrix adjacency(const GainGraph& g) {
    HermitianMatrix m(g.vertex_count());
    for (const auto& e : g.edges()) m.set_pair(e.p, e.q, e.gain.value());
    return m;
}

}  // namespace gainspec

#endif
