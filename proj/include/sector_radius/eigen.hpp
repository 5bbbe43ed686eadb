#pragma once

#include <vector>

#include "sector_radius/matrix.hpp"

namespace sector_radius {

/// Spectral decomposition H = V diag(eigenvalues) V*.
struct HermEigResult {
    std::vector<double> eigenvalues; ///< ascending
    ComplexMatrix eigenvectors;      ///< orthonormal columns, column k pairs with eigenvalues[k]
};

/// Relative asymmetry accepted by the Hermitian kernels before symmetrizing.
inline constexpr double kHermitianTolerance = 1e-12;

/**
 * @brief Cyclic complex Jacobi eigensolver for Hermitian matrices.
 *
 * The input is symmetrized as (H + H*)/2 first. Sweeps stop once the
 * off-diagonal Frobenius mass drops to 1e-13 * ||H||_F; after 64 sweeps a
 * ConvergenceError is thrown. Ties keep Jacobi output order.
 *
 * Throws DomainError on non-finite entries or asymmetry above
 * kHermitianTolerance * ||H||_F, DimensionError on an empty matrix.
 */
HermEigResult herm_eig(const ComplexMatrix& h);

/// Eigenvalues only (ascending); same kernel without vector accumulation.
std::vector<double> herm_eigenvalues(const ComplexMatrix& h);

/// Singular values, descending, negatives from round-off clamped to 0.
std::vector<double> singular_values(const ComplexMatrix& x);

/// True iff lambda_min(H) >= -tol * max(1, ||H||_F).
bool is_psd(const ComplexMatrix& h, double tol);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const ComplexMatrix& h);

/// Principal square root of a positive semidefinite matrix via the spectral decomposition.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

} // namespace sector_radius
