#include "sector_radius/sectorial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sector_radius/eigen.hpp"
#include "sector_radius/error.hpp"

namespace sector_radius {

namespace {

constexpr double kBoundaryMargin = 1e-10;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_alpha(double alpha, const char* what) {
    if (!(alpha >= 0.0 && alpha < std::numbers::pi / 2)) {
        throw std::invalid_argument(std::string(what) + ": alpha must lie in [0, pi/2)");
    }
}

void reject_boundary(double alpha) {
    if (alpha >= std::numbers::pi / 2 - kBoundaryMargin) {
        throw DomainError("not sectorial: index is within 1e-10 of pi/2");
    }
}

// Golden-section maximization of f on [lo, hi]; returns the best point seen.
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol, double best_x, double best_f) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    auto keep = [&](double x, double fx) {
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    };
    keep(x1, f1);
    keep(x2, f2);
    for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
            keep(x1, f1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
            keep(x2, f2);
        }
    }
    return {best_x, best_f};
}

// Root of g on [lo, hi] with g(inside) > 0 >= g(outside); returns the last
// point where g > 0. `inside` is one of the two ends.
template <typename G>
double positive_edge(G&& g, double inside, double g_in, double outside, double g_out) {
    int side = 0; // Illinois bookkeeping: which end moved last
    for (int iter = 0; iter < 200 && std::abs(outside - inside) > 1e-14; ++iter) {
        double x = inside - g_in * (outside - inside) / (g_out - g_in);
        const double span = outside - inside;
        // Keep the step strictly inside and away from the ends.
        const double t = (x - inside) / span;
        if (!(t > 0.01 && t < 0.99)) x = inside + 0.5 * span;
        const double gx = g(x);
        if (gx > 0.0) {
            inside = x;
            g_in = gx;
            if (side == 1) g_out *= 0.5;
            side = 1;
        } else {
            outside = x;
            g_out = gx;
            if (side == -1) g_in *= 0.5;
            side = -1;
        }
    }
    return inside;
}

} // namespace

double accretivity_threshold(const ComplexMatrix& x) { return 1e-12 * x.frobenius_norm(); }

bool is_accretive(const ComplexMatrix& x) { return min_eigenvalue(real_part(x)) > accretivity_threshold(x); }

bool is_dissipative(const ComplexMatrix& x) { return min_eigenvalue(imag_part(x)) > accretivity_threshold(x); }

bool is_accretive_dissipative(const ComplexMatrix& x) { return is_accretive(x) && is_dissipative(x); }

SectorInfo sector_index(const ComplexMatrix& x, const SectorIndexOptions& options) {
    if (options.grid < 8) throw std::invalid_argument("sector_index: grid must be >= 8");
    const auto parts = cartesian_decompose(x);
    const double lambda_min = min_eigenvalue(parts.re);
    if (!(lambda_min > accretivity_threshold(x))) {
        std::ostringstream os;
        os << "not accretive: lambda_min(Re X) = " << lambda_min;
        throw DomainError(os.str());
    }

    const std::size_t n = x.size();
    std::vector<Complex> v(n);
    // arg of the support point with outward normal e^{i theta}.
    auto support_arg = [&](double theta) {
        const auto eig = herm_eig(rotated_real_part(parts, -theta));
        for (std::size_t i = 0; i < n; ++i) v[i] = eig.eigenvectors(i, n - 1);
        return std::arg(quadratic_form(x, v));
    };

    const int grid = options.grid;
    const double step = kTwoPi / grid;
    double hi_arg = -std::numbers::pi, hi_theta = 0.0;
    double lo_arg = std::numbers::pi, lo_theta = 0.0;
    for (int k = 0; k < grid; ++k) {
        const double theta = k * step;
        const double a = support_arg(theta);
        if (a > hi_arg) {
            hi_arg = a;
            hi_theta = theta;
        }
        if (a < lo_arg) {
            lo_arg = a;
            lo_theta = theta;
        }
    }
    hi_arg = golden_max(support_arg, hi_theta - step, hi_theta + step, options.refine_tol, hi_theta, hi_arg).second;
    lo_arg = -golden_max([&](double t) { return -support_arg(t); }, lo_theta - step, lo_theta + step,
                         options.refine_tol, lo_theta, -lo_arg)
                  .second;

    SectorInfo info;
    info.accretive = true;
    info.index_alpha = std::max({hi_arg, -lo_arg, 0.0});
    info.rotation_z = 1.0;
    info.lambda_min_re = lambda_min;
    reject_boundary(info.index_alpha);
    return info;
}

SectorInfo rotation_to_sector(const ComplexMatrix& x, int phi_samples) {
    if (phi_samples < 8) throw std::invalid_argument("rotation_to_sector: phi_samples must be >= 8");
    const auto parts = cartesian_decompose(x);
    const double threshold = accretivity_threshold(x);
    auto margin = [&](double phi) { return min_eigenvalue(rotated_real_part(parts, phi)) - threshold; };

    // The admissible rotations form one open arc, so a coarse grid that hits
    // it is as good as a fine one; refine only while nothing is found.
    int count = std::min(phi_samples, 32);
    double step = 0.0;
    std::vector<double> g;
    int best_start = -1, best_len = 0;
    while (true) {
        step = kTwoPi / count;
        g.assign(count, 0.0);
        for (int k = 0; k < count; ++k) g[k] = margin(k * step);

        // Longest cyclic run of positive samples; earliest start wins ties.
        for (int k = 0; k < count; ++k) {
            const int prev = (k + count - 1) % count;
            if (!(g[k] > 0.0) || g[prev] > 0.0) continue;
            int len = 0;
            while (len < count && g[(k + len) % count] > 0.0) ++len;
            if (len > best_len) {
                best_len = len;
                best_start = k;
            }
        }
        if (best_start >= 0 || count >= phi_samples) break;
        count = std::min(2 * count, phi_samples);
    }
    if (best_start < 0) {
        throw DomainError("not sectorial: no rotation makes Re(zX) positive definite");
    }

    // Work in unwrapped angles: positive samples occupy [first, last].
    const double first = best_start * step;
    const double last = (best_start + best_len - 1) * step;
    const int before = (best_start + count - 1) % count;
    const int after = (best_start + best_len) % count;
    const double lo = positive_edge(margin, first, g[best_start], first - step, g[before]);
    const double hi = positive_edge(margin, last, g[(best_start + best_len - 1) % count], last + step, g[after]);

    double phi = std::fmod(0.5 * (lo + hi), kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi -= kTwoPi;

    SectorInfo info;
    info.accretive = g[0] > 0.0;
    info.index_alpha = std::max(0.0, 0.5 * (std::numbers::pi - (hi - lo)));
    info.rotation_z = std::polar(1.0, phi);
    info.lambda_min_re = margin(phi) + threshold;
    reject_boundary(info.index_alpha);
    return info;
}

ComplexMatrix tan_block(const ComplexMatrix& x, double alpha) {
    require_alpha(alpha, "tan_block");
    const auto parts = cartesian_decompose(x);
    const auto diag = parts.re * Complex(std::tan(alpha), 0.0);
    return block2x2(diag, parts.im, parts.im, diag);
}

ComplexMatrix sec_block(const ComplexMatrix& x, double alpha) {
    require_alpha(alpha, "sec_block");
    const auto diag = real_part(x) * Complex(1.0 / std::cos(alpha), 0.0);
    return block2x2(diag, x, x.adjoint(), diag);
}

} // namespace sector_radius
