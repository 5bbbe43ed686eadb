#pragma once

#include <vector>

#include "sector_radius/matrix.hpp"
#include "sector_radius/norms.hpp"

namespace sector_radius {

struct RadiusOptions {
    /// Uniform samples over [0, pi) before refinement; at least 8.
    int grid = 1024;
    /// Refinement stops once cert_error <= refine_tol * L, L = N(Re X) + N(Im X).
    double refine_tol = 1e-10;
    /// Hard cap on profile evaluations spent in refinement.
    int max_refinements = 1 << 16;
};

/**
 * @brief Certified estimate of omega_N(X) = sup_theta N(Re(e^{i theta} X)).
 *
 * value <= omega_N(X) <= value + cert_error, up to the eigensolver round-off
 * already folded into cert_error.
 */
struct RadiusEstimate {
    double value = 0.0;
    double theta_star = 0.0; ///< argmax sample, in [0, pi)
    double cert_error = 0.0;
    NormSpec norm;
    double lipschitz = 0.0; ///< N(Re X) + N(Im X)
    int evaluations = 0;

    double upper() const noexcept { return value + cert_error; }
};

/// A support point of W(X): <Xv, v> for a unit top eigenvector v of Re(e^{-i theta} X).
struct RangePoint {
    double theta = 0.0;
    Complex boundary_point;
    std::vector<Complex> vector;
};

/// N(cos(theta) Re X - sin(theta) Im X).
double radius_profile(const NormSpec& spec, const ComplexMatrix& x, double theta);

RadiusEstimate omega_n(const NormSpec& spec, const ComplexMatrix& x, const RadiusOptions& options);
RadiusEstimate omega_n(const NormSpec& spec, const ComplexMatrix& x, int grid = 1024, double refine_tol = 1e-10);

/// Classical numerical radius (operator norm).
RadiusEstimate omega(const ComplexMatrix& x);

RangePoint support_point(const ComplexMatrix& x, double theta);

/// Support points at theta_k = 2 pi k / samples, k = 0..samples-1.
std::vector<RangePoint> numerical_range_boundary(const ComplexMatrix& x, int samples);

} // namespace sector_radius
