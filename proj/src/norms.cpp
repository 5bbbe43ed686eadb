#include "sector_radius/norms.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sector_radius/eigen.hpp"
#include "sector_radius/error.hpp"
#include "sector_radius/generator.hpp"

namespace sector_radius {

NormSpec NormSpec::schatten(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("NormSpec: Schatten exponent must be >= 1");
    return NormSpec(NormKind::Schatten, p);
}

NormSpec NormSpec::parse(std::string_view text) {
    if (text == "op") return op();
    if (text == "tr") return trace();
    if (text == "fro") return frobenius();
    if (text.starts_with("sp:")) {
        const auto arg = text.substr(3);
        if (arg == "inf") return op();
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), p);
        if (ec != std::errc() || ptr != arg.data() + arg.size()) {
            throw std::invalid_argument("NormSpec: bad exponent in '" + std::string(text) + "'");
        }
        return schatten(p);
    }
    throw std::invalid_argument("NormSpec: unknown norm '" + std::string(text) + "' (expected op|tr|fro|sp:<p>)");
}

std::string NormSpec::to_string() const {
    switch (kind_) {
    case NormKind::Operator: return "op";
    case NormKind::Trace: return "tr";
    case NormKind::Frobenius: return "fro";
    case NormKind::Schatten: break;
    }
    std::ostringstream os;
    os << "sp:" << p_;
    return os.str();
}

double norm_from_singular_values(const NormSpec& spec, std::span<const double> sigma) {
    double top = 0.0;
    for (double s : sigma) top = std::max(top, s);
    if (top == 0.0) return 0.0;
    const double p = spec.p();
    if (std::isinf(p)) return top;
    if (p == 1.0) {
        double sum = 0.0;
        for (double s : sigma) sum += s;
        return sum;
    }
    // Scale by the largest value so the powers stay in range.
    double sum = 0.0;
    for (double s : sigma) sum += std::pow(s / top, p);
    if (p > 8.0) return top * std::exp(std::log(sum) / p);
    return top * std::pow(sum, 1.0 / p);
}

double evaluate_norm(const NormSpec& spec, const ComplexMatrix& x) {
    // The sum of squared singular values is the sum of squared entries.
    if (spec.kind() == NormKind::Frobenius) return x.frobenius_norm();
    const auto sigma = singular_values(x);
    return norm_from_singular_values(spec, sigma);
}

double evaluate_hermitian_norm(const NormSpec& spec, const ComplexMatrix& h) {
    if (spec.kind() == NormKind::Frobenius) {
        if (h.hermitian_defect() > kHermitianTolerance * h.frobenius_norm()) {
            throw DomainError("evaluate_hermitian_norm: matrix is not Hermitian");
        }
        return h.frobenius_norm();
    }
    auto lambda = herm_eigenvalues(h);
    for (double& l : lambda) l = std::abs(l);
    return norm_from_singular_values(spec, lambda);
}

NormAxiomReport verify_norm_axioms(const NormSpec& spec, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("verify_norm_axioms: trials must be >= 1");
    constexpr double kTol = 1e-9;
    NormAxiomReport report;
    report.trials = trials;

    auto record = [&](const char* axiom, double lhs, double rhs) {
        const double margin = (rhs - lhs) / std::max(1.0, std::abs(rhs));
        if (margin < report.worst_margin) {
            report.worst_margin = margin;
            report.worst_axiom = axiom;
        }
        if (margin < -kTol) report.passed = false;
    };
    auto N = [&](const ComplexMatrix& m) { return evaluate_norm(spec, m); };

    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 5);
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(t));
        const auto x = random_ginibre({n, derive_seed(s, 1)});
        const auto y = random_ginibre({n, derive_seed(s, 2)});
        const auto u = random_unitary({n, derive_seed(s, 3)});
        const auto v = random_unitary({n, derive_seed(s, 4)});
        SplitMix64 rng(derive_seed(s, 5));
        const Complex c = rng.complex_gaussian() * 3.0;

        const double nx = N(x);
        const double ny = N(y);
        record("triangle", N(x + y), nx + ny);
        const double scaled = N(x * c);
        record("homogeneity", scaled, std::abs(c) * nx);
        record("homogeneity", std::abs(c) * nx, scaled);
        const double rotated = N(u * x * v);
        record("unitary_invariance", rotated, nx);
        record("unitary_invariance", nx, rotated);
        const double adj = N(x.adjoint());
        record("self_adjoint", adj, nx);
        record("self_adjoint", nx, adj);
        record("submultiplicative", N(x * y), nx * ny);
        record("hadamard_submultiplicative", N(hadamard(x, y)), nx * ny);
    }
    return report;
}

} // namespace sector_radius
