#include "sector_radius/generator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sector_radius/eigen.hpp"

namespace sector_radius {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h = m;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

} // namespace

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::gaussian() {
    // 1 - u is in (0, 1], so the log is finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SplitMix64::complex_gaussian() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    // Both Box-Muller outputs, each with variance 1/2.
    const double r = std::sqrt(-std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL));
}

ComplexMatrix random_ginibre(const GenConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("random_ginibre: n must be >= 1");
    SplitMix64 rng(cfg.seed);
    ComplexMatrix g(cfg.n);
    for (auto& z : g.entries()) z = cfg.scale * rng.complex_gaussian();
    return g;
}

ComplexMatrix random_hermitian(const GenConfig& cfg) { return hermitian_part(random_ginibre(cfg)); }

ComplexMatrix random_pd(const GenConfig& cfg) {
    const auto g = random_ginibre(cfg);
    auto a = hermitian_part(g * g.adjoint());
    const double shift = 1e-6 * cfg.scale;
    for (std::size_t i = 0; i < cfg.n; ++i) a(i, i) += shift;
    return a;
}

ComplexMatrix random_sectorial(const GenConfig& cfg, double alpha) {
    if (!(alpha >= 0.0 && alpha < std::numbers::pi / 2)) {
        throw std::invalid_argument("random_sectorial: alpha must lie in [0, pi/2)");
    }
    const auto a = random_pd({cfg.n, derive_seed(cfg.seed, 1), cfg.scale});
    if (alpha == 0.0) return a;

    auto t = random_hermitian({cfg.n, derive_seed(cfg.seed, 2), 1.0});
    const auto lambda = herm_eigenvalues(t);
    const double spread = std::max(std::abs(lambda.front()), std::abs(lambda.back()));
    if (spread == 0.0) {
        t = ComplexMatrix::identity(cfg.n);
        t *= std::tan(alpha);
    } else {
        t *= std::tan(alpha) / spread;
    }
    const auto root = psd_sqrt(a);
    const auto im = hermitian_part(root * t * root);
    return a + im * Complex(0.0, 1.0);
}

ComplexMatrix random_accretive_dissipative(const GenConfig& cfg) {
    const auto a = random_pd({cfg.n, derive_seed(cfg.seed, 1), cfg.scale});
    const auto b = random_pd({cfg.n, derive_seed(cfg.seed, 2), cfg.scale});
    return a + b * Complex(0.0, 1.0);
}

ComplexMatrix random_unitary(const GenConfig& cfg) {
    const auto g = random_ginibre({cfg.n, cfg.seed, 1.0});
    const std::size_t n = cfg.n;
    ComplexMatrix q(n);
    std::vector<Complex> v(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
        // Classical Gram-Schmidt, applied twice for orthogonality to round-off.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                Complex r = 0.0;
                for (std::size_t i = 0; i < n; ++i) r += std::conj(q(i, k)) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= r * q(i, k);
            }
        }
        double norm2 = 0.0;
        for (const auto& z : v) norm2 += std::norm(z);
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i) q(i, j) = v[i] * inv;
    }
    return q;
}

ComplexMatrix random_normal(const GenConfig& cfg) {
    const auto u = random_unitary({cfg.n, derive_seed(cfg.seed, 1), 1.0});
    SplitMix64 rng(derive_seed(cfg.seed, 2));
    std::vector<Complex> d(cfg.n);
    for (auto& z : d) z = cfg.scale * rng.complex_gaussian();
    return u * ComplexMatrix::diagonal(d) * u.adjoint();
}

} // namespace sector_radius
