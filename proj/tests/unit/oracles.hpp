#pragma once

// Reference computations for the unit tests. They share no code path with
// the optimizers they check: brute-force grids, closed forms and power
// iteration only.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sector_radius/eigen.hpp"
#include "sector_radius/matrix.hpp"
#include "sector_radius/norms.hpp"

namespace oracle {

using sector_radius::Complex;
using sector_radius::ComplexMatrix;

/// max over theta_k = k pi / samples of N(Re(e^{i theta_k} X)); a lower bound on omega_N.
inline double dense_grid_radius(const sector_radius::NormSpec& spec, const ComplexMatrix& x, int samples) {
    const auto parts = sector_radius::cartesian_decompose(x);
    double best = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta = std::numbers::pi * k / samples;
        best = std::max(best, sector_radius::evaluate_hermitian_norm(
                                  spec, sector_radius::rotated_real_part(parts, theta)));
    }
    return best;
}

/// Eigenvalues of a 2x2 Hermitian matrix from the characteristic polynomial, ascending.
inline std::pair<double, double> eig2(const ComplexMatrix& h) {
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double b = std::abs(h(0, 1));
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), b);
    return {mean - r, mean + r};
}

/// Largest |eigenvalue| of a Hermitian matrix by power iteration on H^2.
inline double spectral_radius_power(const ComplexMatrix& h, int iters = 4000) {
    const std::size_t n = h.size();
    std::vector<Complex> v(n), w(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Complex(1.0 + 0.1 * i, 0.3 * i);
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 0.0;
            for (std::size_t j = 0; j < n; ++j) w[i] += h(i, j) * v[j];
        }
        double norm = 0.0;
        for (auto& z : w) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        lambda = norm;
    }
    return lambda;
}

/// Numerical radius of a 2x2 matrix from the closed form of its elliptical range:
/// foci at the eigenvalues, minor axis sqrt(tr(X*X) - |l1|^2 - |l2|^2).
inline double omega_2x2(const ComplexMatrix& x) {
    const Complex tr = x(0, 0) + x(1, 1);
    const Complex det = x(0, 0) * x(1, 1) - x(0, 1) * x(1, 0);
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    const Complex l1 = 0.5 * (tr + disc);
    const Complex l2 = 0.5 * (tr - disc);
    const double frob2 = std::norm(x(0, 0)) + std::norm(x(0, 1)) + std::norm(x(1, 0)) + std::norm(x(1, 1));
    const double minor = std::sqrt(std::max(0.0, frob2 - std::norm(l1) - std::norm(l2)));
    const double focal = std::abs(l1 - l2);
    const double major = std::hypot(minor, focal);
    const Complex centre = 0.5 * (l1 + l2);
    // sup over the ellipse boundary of |centre + (major/2) cos t u + (minor/2) sin t u i|.
    const Complex u = focal > 0.0 ? (l1 - l2) / focal : Complex(1.0, 0.0);
    double best = 0.0;
    for (int k = 0; k < 200000; ++k) {
        const double t = 2.0 * std::numbers::pi * k / 200000;
        const Complex p = centre + u * Complex(0.5 * major * std::cos(t), 0.5 * minor * std::sin(t));
        best = std::max(best, std::abs(p));
    }
    return best;
}

/// tan of the sector index of an accretive X: spectral radius of R^{-1/2} (Im X) R^{-1/2}.
inline double tan_index(const ComplexMatrix& x) {
    const auto parts = sector_radius::cartesian_decompose(x);
    const auto eig = sector_radius::herm_eig(parts.re);
    const std::size_t n = x.size();
    ComplexMatrix inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                inv_sqrt(i, j) += eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k)) /
                                  std::sqrt(eig.eigenvalues[k]);
    auto m = inv_sqrt * parts.im * inv_sqrt;
    m = 0.5 * (m + m.adjoint());
    return spectral_radius_power(m);
}

inline double max_abs(const ComplexMatrix& m) {
    double best = 0.0;
    for (const auto& z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

} // namespace oracle
