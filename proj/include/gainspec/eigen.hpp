#ifndef GAINSPEC_EIGEN_HPP
#define GAINSPEC_EIGEN_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gainspec/hermitian.hpp"

namespace gainspec {

/// Eigenvalues sorted descending, matching unitary eigenvector columns,
/// and solver diagnostics.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    std::vector<std::vector<std::complex<double>>> eigenvectors;  // column j
    double residual = 0.0;         // max_j ||A q_j - lambda_j q_j||_2
    double unitarity_defect = 0.0; // ||Q*Q - I||_max
    int sweeps = 0;
    bool converged = true;

    double spectral_radius() const {
        double r = 0.0;
        for (double l : eigenvalues) r = std::max(r, std::abs(l));
        return r;
    }
};

namespace detail {

/// Cyclic Jacobi for a dense real symmetric matrix, in place. Accumulates
/// rotations into v (must come in as identity). Deterministic sweep order.
inline int jacobi_real_symmetric(std::vector<double>& a, std::vector<double>& v, int n,
                                 double off_target, int max_sweeps, bool* converged) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto vt = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    *converged = (off_norm() <= off_target);
    while (!*converged && sweep < max_sweeps) {
        ++sweep;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double app = at(p, p), aqq = at(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0)
                                     ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                     : 1.0 / (theta - std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = vt(k, p), vkq = vt(k, q);
                    vt(k, p) = c * vkp - s * vkq;
                    vt(k, q) = s * vkp + c * vkq;
                }
            }
        }
        if (off_norm() <= off_target) *converged = true;
    }
    return sweep;
}

}  // namespace detail

/// Hermitian eigendecomposition via the real symmetric embedding
/// [[X, -Y], [Y, X]] of H = X + iY, diagonalized with cyclic Jacobi.
/// The doubled spectrum is collapsed by pairing equal eigenvalues; complex
/// eigenvectors are rebuilt from the paired real vectors with a
/// Gram-Schmidt pass inside each (near-)degenerate group.
inline SpectralDecomposition eigendecompose(const HermitianMatrix& h) {
    const int n = h.dim();
    if (h.hermitian_defect() > 1e-12)
        throw std::invalid_argument("eigendecompose: input is not Hermitian within 1e-12");

    SpectralDecomposition out;
    if (n == 0) return out;

    const int m = 2 * n;
    std::vector<double> a(static_cast<std::size_t>(m) * m, 0.0);
    std::vector<double> v(static_cast<std::size_t>(m) * m, 0.0);
    for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i) * m + i] = 1.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::complex<double> z = h.at(i, j);
            a[static_cast<std::size_t>(i) * m + j] = z.real();
            a[static_cast<std::size_t>(i) * m + (j + n)] = -z.imag();
            a[static_cast<std::size_t>(i + n) * m + j] = z.imag();
            a[static_cast<std::size_t>(i + n) * m + (j + n)] = z.real();
        }
    }

    const double norm_h = h.frobenius_norm();
    bool converged = true;
    out.sweeps = detail::jacobi_real_symmetric(a, v, m, 1e-12 * std::max(norm_h, 1e-300),
                                               100, &converged);
    out.converged = converged;

    // Doubled spectrum: every eigenvalue of H appears twice.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const double di = a[static_cast<std::size_t>(i) * m + i];
        const double dj = a[static_cast<std::size_t>(j) * m + j];
        if (di != dj) return di > dj;
        return i < j;  // tie-break by original index
    });

    // Greedy nearest-value pairing on the sorted list = consecutive pairs.
    out.eigenvalues.resize(n);
    for (int k = 0; k < n; ++k) {
        const double l1 = a[static_cast<std::size_t>(order[2 * k]) * m + order[2 * k]];
        const double l2 = a[static_cast<std::size_t>(order[2 * k + 1]) * m + order[2 * k + 1]];
        out.eigenvalues[k] = 0.5 * (l1 + l2);
    }

    const double rho = *std::max_element(out.eigenvalues.begin(), out.eigenvalues.end(),
                                         [](double x, double y) { return std::abs(x) < std::abs(y); });
    const double scale = std::max(1.0, std::abs(rho));
    const double group_tol = 1e-10 * scale;

    auto candidate = [&](int col) {
        std::vector<std::complex<double>> q(n);
        for (int i = 0; i < n; ++i)
            q[i] = std::complex<double>(v[static_cast<std::size_t>(i) * m + col],
                                        v[static_cast<std::size_t>(i + n) * m + col]);
        return q;
    };

    out.eigenvectors.assign(n, {});
    int k = 0;
    while (k < n) {
        int gend = k + 1;
        while (gend < n && out.eigenvalues[gend - 1] - out.eigenvalues[gend] <= group_tol) ++gend;
        const int d = gend - k;
        // 2d real eigenvectors span a d-dimensional complex eigenspace.
        std::vector<std::vector<std::complex<double>>> basis;
        for (int j = 2 * k; j < 2 * gend && static_cast<int>(basis.size()) < d; ++j) {
            std::vector<std::complex<double>> q = candidate(order[j]);
            for (const auto& b : basis) {
                std::complex<double> proj = 0.0;
                for (int i = 0; i < n; ++i) proj += std::conj(b[i]) * q[i];
                for (int i = 0; i < n; ++i) q[i] -= proj * b[i];
            }
            double nrm = 0.0;
            for (int i = 0; i < n; ++i) nrm += std::norm(q[i]);
            nrm = std::sqrt(nrm);
            if (nrm > 1e-6) {
                for (int i = 0; i < n; ++i) q[i] /= nrm;
                basis.push_back(std::move(q));
            }
        }
        if (static_cast<int>(basis.size()) != d)
            throw std::runtime_error("eigendecompose: eigenvector collapse failed");
        for (int j = 0; j < d; ++j) out.eigenvectors[k + j] = std::move(basis[j]);
        k = gend;
    }

    // Diagnostics.
    for (int j = 0; j < n; ++j) {
        const auto aq = h.multiply(out.eigenvectors[j]);
        double r = 0.0;
        for (int i = 0; i < n; ++i) r += std::norm(aq[i] - out.eigenvalues[j] * out.eigenvectors[j][i]);
        out.residual = std::max(out.residual, std::sqrt(r));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::complex<double> dot = 0.0;
            for (int t = 0; t < n; ++t) dot += std::conj(out.eigenvectors[i][t]) * out.eigenvectors[j][t];
            const double target = (i == j) ? 1.0 : 0.0;
            out.unitarity_defect = std::max(out.unitarity_defect, std::abs(dot - target));
        }
    }
    return out;
}

}  // namespace gainspec

#endif
