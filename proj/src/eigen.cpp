#include "sector_radius/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sector_radius/error.hpp"

namespace sector_radius {

namespace {

constexpr double kOffDiagonalTolerance = 1e-13;
constexpr int kMaxSweeps = 64;

void check_input(const ComplexMatrix& h) {
    if (h.empty()) throw DimensionError("herm_eig: empty matrix");
    if (!h.all_finite()) throw DomainError("herm_eig: non-finite entry");
    const double defect = h.hermitian_defect();
    if (defect > kHermitianTolerance * h.frobenius_norm()) {
        throw DomainError("herm_eig: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
}

// Rotates pairs (p, q) until the off-diagonal mass is negligible. `a` holds the
// symmetrized matrix row-major; `v`, when non-null, accumulates the rotations.
void jacobi(std::vector<Complex>& a, std::size_t n, std::vector<Complex>* v) {
    double frob2 = 0.0;
    for (const auto& z : a) frob2 += std::norm(z);
    const double target = kOffDiagonalTolerance * std::sqrt(frob2);

    for (int sweep = 0; sweep <= kMaxSweeps; ++sweep) {
        double off2 = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off2 += std::norm(a[p * n + q]);
        if (std::sqrt(2.0 * off2) <= target) return;
        if (sweep == kMaxSweeps) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                // Later sweeps: entries far below both diagonal entries are round-off.
                if (sweep > 3 && mag < 1e-18 * (std::abs(app) + std::abs(aqq))) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                const double theta = (aqq - app) / (2.0 * mag);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex phase = apq / mag;
                const Complex s_conj = s * std::conj(phase);
                const Complex s_phase = s * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hkp = a[k * n + p];
                    const Complex hkq = a[k * n + q];
                    a[k * n + p] = c * hkp - s_conj * hkq;
                    a[k * n + q] = s * hkp + c * std::conj(phase) * hkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex hpk = a[p * n + k];
                    const Complex hqk = a[q * n + k];
                    a[p * n + k] = c * hpk - s_phase * hqk;
                    a[q * n + k] = s * hpk + c * phase * hqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                a[p * n + p] = app - t * mag;
                a[q * n + q] = aqq + t * mag;

                if (v != nullptr) {
                    auto& vv = *v;
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = vv[k * n + p];
                        const Complex vkq = vv[k * n + q];
                        vv[k * n + p] = c * vkp - s_conj * vkq;
                        vv[k * n + q] = s * vkp + c * std::conj(phase) * vkq;
                    }
                }
            }
        }
    }
    throw ConvergenceError("herm_eig: Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
}

std::vector<Complex> symmetrized(const ComplexMatrix& h) {
    const std::size_t n = h.size();
    std::vector<Complex> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = h(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a[i * n + j] = z;
            a[j * n + i] = std::conj(z);
        }
    }
    return a;
}

} // namespace

HermEigResult herm_eig(const ComplexMatrix& h) {
    check_input(h);
    const std::size_t n = h.size();
    auto a = symmetrized(h);
    std::vector<Complex> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
    jacobi(a, n, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i].real() < a[j * n + j].real(); });

    HermEigResult result{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        result.eigenvalues[k] = a[src * n + src].real();
        for (std::size_t i = 0; i < n; ++i) result.eigenvectors(i, k) = v[i * n + src];
    }
    return result;
}

std::vector<double> herm_eigenvalues(const ComplexMatrix& h) {
    check_input(h);
    const std::size_t n = h.size();
    auto a = symmetrized(h);
    jacobi(a, n, nullptr);
    std::vector<double> lambda(n);
    for (std::size_t i = 0; i < n; ++i) lambda[i] = a[i * n + i].real();
    std::stable_sort(lambda.begin(), lambda.end());
    return lambda;
}

std::vector<double> singular_values(const ComplexMatrix& x) {
    // Eigenvalues of the dilation [[0, X], [X*, 0]] are +-sigma_i. This keeps
    // small singular values accurate to eps * ||X|| instead of sqrt(eps) * ||X||
    // as with eig(X* X).
    const std::size_t n = x.size();
    const ComplexMatrix zero(n);
    const auto lambda = herm_eigenvalues(block2x2(zero, x, x.adjoint(), zero));
    std::vector<double> sigma(n);
    for (std::size_t k = 0; k < n; ++k) sigma[k] = std::max(lambda[2 * n - 1 - k], 0.0);
    return sigma;
}

bool is_psd(const ComplexMatrix& h, double tol) {
    return min_eigenvalue(h) >= -tol * std::max(1.0, h.frobenius_norm());
}

double min_eigenvalue(const ComplexMatrix& h) { return herm_eigenvalues(h).front(); }

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    const auto eig = herm_eig(h);
    const std::size_t n = h.size();
    const auto& v = eig.eigenvectors;
    ComplexMatrix root(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double r = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = r * v(i, k);
            for (std::size_t j = 0; j < n; ++j) root(i, j) += vik * std::conj(v(j, k));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        root(i, i) = root(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (root(i, j) + std::conj(root(j, i)));
            root(i, j) = z;
            root(j, i) = std::conj(z);
        }
    }
    return root;
}

} // namespace sector_radius
