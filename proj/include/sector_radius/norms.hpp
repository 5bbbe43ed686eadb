#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>

#include "sector_radius/matrix.hpp"

namespace sector_radius {

enum class NormKind { Operator, Schatten, Trace, Frobenius };

/**
 * @brief One member of the Schatten family of unitarily invariant norms.
 *
 * Trace is Schatten(1), Frobenius is Schatten(2) and Operator is the
 * largest singular value (Schatten(inf)). Every shipped kind is unitarily
 * invariant, submultiplicative and self-adjoint, so the capability flags are
 * always true; they exist so callers can gate checks that need them.
 */
class NormSpec {
  public:
    NormSpec() = default;

    static NormSpec op() { return NormSpec(NormKind::Operator, kInf); }
    static NormSpec trace() { return NormSpec(NormKind::Trace, 1.0); }
    static NormSpec frobenius() { return NormSpec(NormKind::Frobenius, 2.0); }
    /// Throws std::invalid_argument for p < 1 or NaN.
    static NormSpec schatten(double p);

    /// Parses "op" | "tr" | "fro" | "sp:<p>" ("sp:inf" is the operator norm).
    static NormSpec parse(std::string_view text);

    NormKind kind() const noexcept { return kind_; }
    /// Schatten exponent; infinity for the operator norm.
    double p() const noexcept { return p_; }
    std::string to_string() const;

    bool unitarily_invariant() const noexcept { return true; }
    bool multiplicative() const noexcept { return true; }
    bool self_adjoint() const noexcept { return true; }

    bool operator==(const NormSpec&) const = default;

  private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();
    NormSpec(NormKind kind, double p) : kind_(kind), p_(p) {}

    NormKind kind_ = NormKind::Operator;
    double p_ = kInf;
};

/// Norm from nonnegative singular values given in any order.
double norm_from_singular_values(const NormSpec& spec, std::span<const double> sigma);

/// N(X).
double evaluate_norm(const NormSpec& spec, const ComplexMatrix& x);

/// N(H) for Hermitian H, using |eigenvalues| as singular values.
double evaluate_hermitian_norm(const NormSpec& spec, const ComplexMatrix& h);

/// Outcome of randomized axiom checks for a norm.
struct NormAxiomReport {
    bool passed = true;
    int trials = 0;
    /// Smallest relative slack (rhs - lhs) / max(1, rhs) over every checked axiom; negative means violated.
    double worst_margin = std::numeric_limits<double>::infinity();
    std::string worst_axiom;
};

/**
 * Samples random matrices and unitaries and checks the triangle inequality,
 * absolute homogeneity, unitary invariance, self-adjointness,
 * submultiplicativity and Hadamard submultiplicativity at relative
 * tolerance 1e-9.
 */
NormAxiomReport verify_norm_axioms(const NormSpec& spec, int trials, std::uint64_t seed);

} // namespace sector_radius
