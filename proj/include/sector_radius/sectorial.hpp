#pragma once

#include "sector_radius/matrix.hpp"

namespace sector_radius {

/// Result of a sectoriality computation.
struct SectorInfo {
    /// Re X itself is positive definite (the z = 1 case).
    bool accretive = false;
    /// alpha in [0, pi/2) with W(zX) contained in the sector |arg w| <= alpha.
    double index_alpha = 0.0;
    /// Unit-modulus witness z.
    Complex rotation_z{1.0, 0.0};
    /// lambda_min(Re(zX)).
    double lambda_min_re = 0.0;
};

/// lambda_min(Re X) must exceed this for X to count as accretive.
double accretivity_threshold(const ComplexMatrix& x);

bool is_accretive(const ComplexMatrix& x);
bool is_dissipative(const ComplexMatrix& x);
bool is_accretive_dissipative(const ComplexMatrix& x);

struct SectorIndexOptions {
    /// Support directions sampled over [0, 2 pi).
    int grid = 256;
    /// Golden-section stopping width in theta.
    double refine_tol = 1e-12;
};

/**
 * @brief Sectoriality index of an accretive matrix (z = 1).
 *
 * Samples support points of W(X), takes the largest |arg w|, then refines the
 * extreme upper and lower support directions by golden-section search. The
 * argument of the support point is unimodal around the boundary of a convex
 * set that excludes the origin, so the extremum lies within one grid cell of
 * the best sample.
 *
 * Throws DomainError when X is not accretive (the message names
 * lambda_min(Re X)) or when the index is within 1e-10 of pi/2.
 */
SectorInfo sector_index(const ComplexMatrix& x, const SectorIndexOptions& options = {});

/**
 * @brief Rotation z = e^{i phi} minimizing the sectoriality index of zX.
 *
 * Re(e^{i phi} X) is positive definite exactly on an open arc of phi of
 * length pi - 2 alpha*, where alpha* is the smallest index over all
 * rotations. The arc is located on a grid of 32 angles, doubled up to
 * phi_samples while no angle lands inside it; both endpoints are
 * bracketed to 1e-14 by safeguarded regula falsi on lambda_min, and z is
 * taken at the arc midpoint. Endpoints are kept on the positive side, so the
 * reported index never undershoots the index of the returned zX.
 *
 * Throws DomainError ("not sectorial") when no grid angle makes Re(zX)
 * positive definite or the index is within 1e-10 of pi/2.
 */
SectorInfo rotation_to_sector(const ComplexMatrix& x, int phi_samples = 4096);

/// [[tan(a) Re X, Im X], [Im X, tan(a) Re X]]; PSD whenever W(X) lies in the sector of half-angle a.
ComplexMatrix tan_block(const ComplexMatrix& x, double alpha);

/// [[sec(a) Re X, X], [X*, sec(a) Re X]]; PSD whenever W(X) lies in the sector of half-angle a.
ComplexMatrix sec_block(const ComplexMatrix& x, double alpha);

} // namespace sector_radius
