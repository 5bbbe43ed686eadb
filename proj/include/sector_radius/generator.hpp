#pragma once

#include <cstddef>
#include <cstdint>

#include "sector_radius/matrix.hpp"

namespace sector_radius {

/**
 * @brief SplitMix64: a counter-based 64-bit generator.
 *
 * The state advances by the golden-ratio increment 0x9E3779B97F4A7C15 and each
 * output is the state passed through the finalizer
 *   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
 *   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
 *   z =  z ^ (z >> 31)
 * Gaussians come from Box-Muller on two uniforms, so output depends only on
 * the seed and the IEEE-754 libm behaviour of log/sqrt/cos/sin.
 */
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double gaussian();
    /// Standard complex Gaussian: E|z|^2 = 1.
    Complex complex_gaussian();

  private:
    std::uint64_t state_;
};

/// Mixes a stream index into a seed; used for per-trial and per-factor sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct GenConfig {
    std::size_t n = 1;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

/// i.i.d. standard complex Gaussian entries times cfg.scale.
ComplexMatrix random_ginibre(const GenConfig& cfg);

/// (G + G*)/2 for Ginibre G.
ComplexMatrix random_hermitian(const GenConfig& cfg);

/// G G* + 1e-6 * scale * I.
ComplexMatrix random_pd(const GenConfig& cfg);

/**
 * A^{1/2} (I + iT) A^{1/2} with A = random_pd and T Hermitian rescaled to
 * ||T||_op = tan(alpha). Then Re X = A and Im X = A^{1/2} T A^{1/2}, so
 * the ratio <Im X x, x> / <Re X x, x> sweeps exactly [-tan alpha, tan alpha]
 * and the sectoriality index is alpha. alpha = 0 returns A itself.
 *
 * Throws std::invalid_argument unless 0 <= alpha < pi/2.
 */
ComplexMatrix random_sectorial(const GenConfig& cfg, double alpha);

/// A + iB with A, B independent random_pd draws.
ComplexMatrix random_accretive_dissipative(const GenConfig& cfg);

/// Q from Gram-Schmidt QR of a Ginibre matrix; R has positive diagonal.
ComplexMatrix random_unitary(const GenConfig& cfg);

/// U diag(d) U* with complex Gaussian d.
ComplexMatrix random_normal(const GenConfig& cfg);

} // namespace sector_radius
