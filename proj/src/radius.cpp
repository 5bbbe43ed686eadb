#include "sector_radius/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include "sector_radius/eigen.hpp"

namespace sector_radius {

namespace {

// One sample cell [a, b] of the profile with its certified upper bound.
struct Cell {
    double a, b, fa, fb, ub;
};

struct CellOrder {
    bool operator()(const Cell& lhs, const Cell& rhs) const {
        if (lhs.ub != rhs.ub) return lhs.ub < rhs.ub;
        return lhs.a > rhs.a;
    }
};

/*
 * Upper bound for sup f over [a, b].
 *
 * Lipschitz: |f(t) - f(s)| <= N(Re((e^{it} - e^{is}) X)) <= L |t - s|, so the
 * sup is at most (fa + fb + L w) / 2.
 *
 * Sublinear: f(t) = g(cos t, sin t) with g(u, v) = N(u Re X - v Im X) a
 * seminorm on R^2. For t in the cell, e^{it} = la e^{ia} + lb e^{ib} with
 * la = sin(b - t) / sin w and lb = sin(t - a) / sin w both nonnegative, so
 * f(t) <= la fa + lb fb = fa cos u + B sin u with u = t - a. The right side
 * peaks at hypot(fa, B) when atan2(B, fa) lies in [0, w].
 */
double cell_upper_bound(double a, double b, double fa, double fb, double lipschitz) {
    const double w = b - a;
    const double lip = 0.5 * (fa + fb + lipschitz * w);
    const double sw = std::sin(w);
    const double coef = (fb - fa * std::cos(w)) / sw;
    const double peak_at = std::atan2(coef, fa);
    const double sub = (peak_at >= 0.0 && peak_at <= w) ? std::hypot(fa, coef) : std::max(fa, fb);
    return std::min(lip, sub);
}

class Profile {
  public:
    Profile(const NormSpec& spec, const ComplexMatrix& x) : spec_(spec), parts_(cartesian_decompose(x)) {}

    double operator()(double theta) {
        ++evaluations;
        return evaluate_hermitian_norm(spec_, rotated_real_part(parts_, theta));
    }

    const CartesianParts& parts() const { return parts_; }
    int evaluations = 0;

  private:
    NormSpec spec_;
    CartesianParts parts_;
};

} // namespace

double radius_profile(const NormSpec& spec, const ComplexMatrix& x, double theta) {
    return evaluate_hermitian_norm(spec, rotated_real_part(cartesian_decompose(x), theta));
}

RadiusEstimate omega_n(const NormSpec& spec, const ComplexMatrix& x, const RadiusOptions& options) {
    if (options.grid < 8) throw std::invalid_argument("omega_n: grid must be >= 8");
    if (!(options.refine_tol > 0.0)) throw std::invalid_argument("omega_n: refine_tol must be > 0");
    if (x.empty()) throw std::invalid_argument("omega_n: empty matrix");

    Profile f(spec, x);
    RadiusEstimate est;
    est.norm = spec;
    est.lipschitz = evaluate_hermitian_norm(spec, f.parts().re) + evaluate_hermitian_norm(spec, f.parts().im);
    const double lipschitz = est.lipschitz;
    if (lipschitz == 0.0) return est;

    // Eigenvalues carry at most ~1e-13 ||H||_F error and ||H||_F <= sqrt(n) L;
    // a Schatten norm sums at most n of them.
    const double n = static_cast<double>(x.size());
    const double roundoff = 2e-13 * n * std::sqrt(n) * lipschitz;

    const int grid = options.grid;
    const double step = std::numbers::pi / grid;
    std::vector<double> samples(grid);
    for (int k = 0; k < grid; ++k) samples[k] = f(k * step);

    double best = samples[0];
    double best_theta = 0.0;
    for (int k = 1; k < grid; ++k) {
        if (samples[k] > best) {
            best = samples[k];
            best_theta = k * step;
        }
    }

    std::priority_queue<Cell, std::vector<Cell>, CellOrder> cells;
    for (int k = 0; k < grid; ++k) {
        const double a = k * step;
        const double b = (k + 1 == grid) ? std::numbers::pi : (k + 1) * step;
        const double fa = samples[k];
        // f has period pi: f(pi) = f(0).
        const double fb = (k + 1 == grid) ? samples[0] : samples[k + 1];
        cells.push({a, b, fa, fb, cell_upper_bound(a, b, fa, fb, lipschitz)});
    }

    const double target = options.refine_tol * lipschitz;
    int refinements = 0;
    while (true) {
        const Cell top = cells.top();
        if (top.ub - best <= target) break;
        if (refinements >= options.max_refinements) break;
        const double mid = 0.5 * (top.a + top.b);
        if (!(mid > top.a && mid < top.b)) break;
        cells.pop();
        const double fm = f(mid);
        ++refinements;
        if (fm > best) {
            best = fm;
            best_theta = mid;
        }
        cells.push({top.a, mid, top.fa, fm, cell_upper_bound(top.a, mid, top.fa, fm, lipschitz)});
        cells.push({mid, top.b, fm, top.fb, cell_upper_bound(mid, top.b, fm, top.fb, lipschitz)});
    }

    est.value = best;
    est.theta_star = best_theta;
    est.cert_error = std::max(0.0, cells.top().ub - best) + 2.5 * roundoff;
    est.evaluations = f.evaluations;
    return est;
}

RadiusEstimate omega_n(const NormSpec& spec, const ComplexMatrix& x, int grid, double refine_tol) {
    RadiusOptions options;
    options.grid = grid;
    options.refine_tol = refine_tol;
    return omega_n(spec, x, options);
}

RadiusEstimate omega(const ComplexMatrix& x) { return omega_n(NormSpec::op(), x); }

RangePoint support_point(const ComplexMatrix& x, double theta) {
    const auto parts = cartesian_decompose(x);
    const auto eig = herm_eig(rotated_real_part(parts, -theta));
    const std::size_t n = x.size();
    RangePoint point;
    point.theta = theta;
    point.vector.resize(n);
    for (std::size_t i = 0; i < n; ++i) point.vector[i] = eig.eigenvectors(i, n - 1);
    point.boundary_point = quadratic_form(x, point.vector);
    return point;
}

std::vector<RangePoint> numerical_range_boundary(const ComplexMatrix& x, int samples) {
    if (samples < 4) throw std::invalid_argument("numerical_range_boundary: samples must be >= 4");
    std::vector<RangePoint> points;
    points.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) points.push_back(support_point(x, 2.0 * std::numbers::pi * k / samples));
    return points;
}

} // namespace sector_radius
