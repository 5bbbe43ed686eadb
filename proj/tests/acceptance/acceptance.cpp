// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
// Criterion 5 (and 10, which repeats it) runs the full randomized suite
// single-threaded, so this binary takes a few minutes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "sector_radius/eigen.hpp"
#include "sector_radius/generator.hpp"
#include "sector_radius/harness.hpp"
#include "sector_radius/io.hpp"
#include "sector_radius/radius.hpp"
#include "sector_radius/sectorial.hpp"

using namespace sector_radius;
using enum InequalityId;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int number, const char* title, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %-56s %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", number, title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

const NormSpec kNorms[] = {NormSpec::op(), NormSpec::trace(), NormSpec::frobenius(), NormSpec::schatten(3)};

// Largest sample on a uniform theta grid, together with a rigorous upper
// bound for the profile between samples: on [a, b] the profile is at most
// the chord of the seminorm through (a, fa) and (b, fb), peaking at
// hypot(fa, B) with B = (fb - fa cos w) / sin w.
struct GridOracle {
    double value;
    double upper;
};

GridOracle dense_grid(const NormSpec& spec, const ComplexMatrix& x, int samples) {
    const auto parts = cartesian_decompose(x);
    std::vector<double> f(samples);
    for (int k = 0; k < samples; ++k)
        f[k] = evaluate_hermitian_norm(spec, rotated_real_part(parts, std::numbers::pi * k / samples));
    const double w = std::numbers::pi / samples;
    double value = 0.0, upper = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double fa = f[k];
        const double fb = f[(k + 1) % samples];
        const double b = (fb - fa * std::cos(w)) / std::sin(w);
        const double peak = std::atan2(b, fa);
        value = std::max(value, fa);
        upper = std::max(upper, (peak >= 0.0 && peak <= w) ? std::hypot(fa, b) : std::max(fa, fb));
    }
    return {value, upper};
}

SuiteConfig full_suite_config() {
    SuiteConfig config;
    for (const auto& e : all_inequalities()) config.ids.push_back(e.id);
    config.trials = 200;
    config.dims = {2, 3, 4, 5, 6};
    config.norms = {NormSpec::op(), NormSpec::trace(), NormSpec::frobenius(), NormSpec::schatten(3)};
    config.seed = 42;
    config.threads = 1;
    return config;
}

std::string first_suite_json;

} // namespace

int main() {
    report(1, "eigensolver soundness (500 Hermitian, n<=16)", [] {
        double worst_res = 0.0, worst_orth = 0.0;
        int bad = 0;
        for (std::size_t t = 0; t < 500; ++t) {
            const std::size_t n = 2 + t % 15;
            const auto h = random_hermitian({n, derive_seed(1001, t), 1.0 + (t % 7)});
            const auto r = herm_eig(h);
            ComplexMatrix lambda(n);
            for (std::size_t k = 0; k < n; ++k) lambda(k, k) = r.eigenvalues[k];
            const double res = (h * r.eigenvectors - r.eigenvectors * lambda).frobenius_norm() /
                               std::max(1.0, h.frobenius_norm());
            const double orth =
                (r.eigenvectors.adjoint() * r.eigenvectors - ComplexMatrix::identity(n)).frobenius_norm();
            worst_res = std::max(worst_res, res);
            worst_orth = std::max(worst_orth, orth);
            if (!(res <= 1e-10 && orth <= 1e-10)) ++bad;
        }
        return Outcome{bad == 0, fmt("worst residual %.2e, worst orthogonality %.2e, failures %.0f", worst_res,
                                     worst_orth, bad)};
    });

    report(2, "omega_N certification vs 1e5-point grid", [] {
        int bad = 0;
        double worst_cert = 0.0;
        for (std::size_t t = 0; t < 100; ++t) {
            const auto x = random_ginibre({1 + t % 6, derive_seed(2002, t)});
            for (const auto& spec : kNorms) {
                const auto est = omega_n(spec, x);
                const auto grid = dense_grid(spec, x, 100000);
                const double rel = est.lipschitz > 0.0 ? est.cert_error / est.lipschitz : 0.0;
                worst_cert = std::max(worst_cert, rel);
                // The grid maximum is a lower bound for omega_N and grid.upper an upper bound.
                const bool ok = grid.value <= est.upper() && est.value <= grid.upper * (1.0 + 1e-12) &&
                                est.cert_error <= 1e-6 * est.lipschitz;
                if (!ok) ++bad;
            }
        }
        return Outcome{bad == 0, fmt("400 estimates, worst cert/L %.2e, failures %.0f", worst_cert, bad)};
    });

    report(3, "classical fixtures (nilpotent, normal, Hermitian)", [] {
        const auto j = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
        const double nil_err = std::abs(omega(j).value - 0.5);
        double normal_err = 0.0;
        for (std::size_t t = 0; t < 50; ++t) {
            const auto x = random_normal({2 + t % 5, derive_seed(3003, t)});
            normal_err = std::max(normal_err, std::abs(omega(x).value - evaluate_norm(NormSpec::op(), x)));
        }
        double herm_err = 0.0;
        for (std::size_t t = 0; t < 50; ++t) {
            const auto a = random_hermitian({1 + t % 6, derive_seed(3004, t)});
            for (const auto& spec : kNorms)
                herm_err = std::max(herm_err, std::abs(omega_n(spec, a).value - evaluate_norm(spec, a)));
        }
        return Outcome{nil_err <= 1e-8 && normal_err <= 1e-8 && herm_err <= 1e-10,
                       fmt("nilpotent err %.1e, normal err %.1e, Hermitian err %.1e", nil_err, normal_err,
                           herm_err)};
    });

    report(4, "(1/2)||X|| <= omega(X) <= ||X|| certified", [] {
        int bad = 0;
        for (std::size_t t = 0; t < 500; ++t) {
            const auto x = random_ginibre({2 + t % 5, derive_seed(4004, t)});
            if (check_inequality(A_lower, {x}, NormSpec::op()).verdict != Verdict::CertifiedPass) ++bad;
            if (check_inequality(A_upper, {x}, NormSpec::op()).verdict != Verdict::CertifiedPass) ++bad;
        }
        const auto j = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
        const double gap = std::abs(omega(j).value - 0.5 * evaluate_norm(NormSpec::op(), j));
        return Outcome{bad == 0 && gap <= 1e-8,
                       fmt("uncertified checks %.0f of 1000, nilpotent equality gap %.1e", bad, gap)};
    });

    report(5, "full suite: zero certified_fail, <= 5 min", [] {
        const auto config = full_suite_config();
        const auto suite = run_suite(config);
        first_suite_json = io::to_json(suite, false).dump();
        int fails = 0, inconclusive = 0, tolerance = 0;
        for (const auto& r : suite.results) {
            fails += r.verdict == Verdict::CertifiedFail;
            inconclusive += r.verdict == Verdict::Inconclusive;
            tolerance += r.verdict == Verdict::TolerancePass;
        }
        char buf[256];
        std::snprintf(buf, sizeof buf, "%zu checks, certified_fail %d, tolerance_pass %d, inconclusive %d, %.0f s",
                      suite.results.size(), fails, tolerance, inconclusive, suite.wall_time_s);
        return Outcome{!suite.any_certified_fail && suite.wall_time_s <= 300.0, buf};
    });

    report(6, "B_prod4 sharpness via nilpotent pair", [] {
        TightnessOptions opts;
        opts.threads = 1;
        const auto scan = tightness_scan(B_prod4, 1000, 6006, opts);
        const bool ok = std::abs(scan.max_ratio - 1.0) <= 1e-9 && scan.max_ratio_source.starts_with("fixture");
        return Outcome{ok, fmt("max ratio 1 %+.2e (random trials max %.4f)", scan.max_ratio - 1.0,
                               scan.random_max_ratio)};
    });

    report(7, "sector index and block positivity", [] {
        double worst_index = 0.0, worst_block = 0.0;
        int bad = 0;
        for (double alpha : {0.1, 0.5, 1.0, 1.4}) {
            for (std::size_t t = 0; t < 50; ++t) {
                const auto x = random_sectorial({2 + t % 5, derive_seed(7007, t)}, alpha);
                const double index = sector_index(x).index_alpha;
                worst_index = std::max(worst_index, std::abs(index - alpha));
                for (const auto& block : {tan_block(x, index + 1e-8), sec_block(x, index + 1e-8)}) {
                    const double m = -min_eigenvalue(block) / block.frobenius_norm();
                    worst_block = std::max(worst_block, m);
                    if (m > 1e-9) ++bad;
                }
                if (std::abs(index - alpha) > 1e-6) ++bad;
            }
        }
        return Outcome{bad == 0, fmt("worst |index - alpha| %.1e, worst -lambda_min/||B||_F %.1e", worst_index,
                                     worst_block)};
    });

    report(8, "accretive-dissipative factor 2 (product, m=2 Hadamard)", [] {
        int bad = 0;
        for (std::size_t t = 0; t < 200; ++t) {
            const std::size_t n = 2 + t % 5;
            const auto x = random_accretive_dissipative({n, derive_seed(8008, 2 * t)});
            const auto y = random_accretive_dissipative({n, derive_seed(8008, 2 * t + 1)});
            for (const auto& spec : kNorms) {
                if (check_inequality(C_AD_prod2, {x, y}, spec).verdict != Verdict::CertifiedPass) ++bad;
                if (check_inequality(C_AD_had_m, {x, y}, spec).verdict != Verdict::CertifiedPass) ++bad;
            }
        }
        return Outcome{bad == 0, fmt("1600 checks, not certified %.0f", bad)};
    });

    report(9, "I_diag_psd counterfixture is certified_fail", [] {
        const auto a = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
        const auto r = check_inequality(I_diag_psd, {a, ComplexMatrix::ones(2)}, NormSpec::op());
        return Outcome{r.verdict == Verdict::CertifiedFail,
                       std::string("verdict ") + std::string(to_string(r.verdict)) +
                           fmt(", lhs [%.3f, %.3f], rhs hi %.3f", r.lhs.lo, r.lhs.hi, r.rhs.hi)};
    });

    report(10, "determinism of the full suite report", [] {
        if (first_suite_json.empty()) return Outcome{false, "criterion 5 produced no report"};
        const auto again = run_suite(full_suite_config());
        const auto second = io::to_json(again, false).dump();
        return Outcome{second == first_suite_json,
                       fmt("report sizes %.0f / %.0f bytes", first_suite_json.size(), second.size())};
    });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
