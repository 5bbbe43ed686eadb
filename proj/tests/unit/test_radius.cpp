#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "sector_radius/eigen.hpp"
#include "sector_radius/generator.hpp"
#include "sector_radius/radius.hpp"

using namespace sector_radius;

namespace {

const NormSpec kNorms[] = {NormSpec::op(), NormSpec::trace(), NormSpec::frobenius(), NormSpec::schatten(3)};

} // namespace

TEST_SUITE("radius") {

TEST_CASE("nilpotent Jordan block") {
    const auto j = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
    // Re(e^{i theta} J) has eigenvalues +-1/2 for every theta.
    const auto op = omega_n(NormSpec::op(), j);
    CHECK(op.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(op.upper() - 0.5 <= 1e-6);
    CHECK(omega(j).value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(omega_n(NormSpec::trace(), j).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(omega_n(NormSpec::frobenius(), j).value == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("2x2 matrices against the elliptical range") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto x = random_ginibre({2, seed});
        const auto est = omega(x);
        const double ref = oracle::omega_2x2(x);
        CHECK(est.value <= ref * (1.0 + 1e-9));
        CHECK(ref <= est.upper() * (1.0 + 1e-9));
        CHECK(est.value == doctest::Approx(ref).epsilon(1e-8));
    }
}

TEST_CASE("dense grid oracle lies inside the certified bracket") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto x = random_ginibre({2 + seed % 5, seed});
        for (const auto& spec : kNorms) {
            const auto est = omega_n(spec, x);
            const double grid = oracle::dense_grid_radius(spec, x, 20000);
            INFO(spec.to_string(), " seed ", seed);
            CHECK(grid <= est.upper());
            // The grid is itself a lower bound; its spacing error is O(L (pi/20000)^2).
            CHECK(est.value <= grid + 1e-7 * est.lipschitz);
            CHECK(est.cert_error <= 1e-6 * est.lipschitz);
            CHECK(est.cert_error >= 0.0);
            CHECK(est.theta_star >= 0.0);
            CHECK(est.theta_star < std::numbers::pi);
            CHECK(radius_profile(spec, x, est.theta_star) == doctest::Approx(est.value).epsilon(1e-14));
        }
    }
}

TEST_CASE("Hermitian matrices: omega_N(A) = N(A)") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = random_hermitian({1 + seed % 6, seed});
        for (const auto& spec : kNorms) {
            const auto est = omega_n(spec, a);
            const double n = evaluate_norm(spec, a);
            CHECK(std::abs(est.value - n) <= 1e-10 * std::max(1.0, n));
        }
    }
}

TEST_CASE("normal matrices: omega(X) = ||X||") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto x = random_normal({2 + seed % 5, seed});
        CHECK(omega(x).value == doctest::Approx(evaluate_norm(NormSpec::op(), x)).epsilon(1e-8));
    }
}

TEST_CASE("invariances and norm-like properties") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const std::size_t n = 2 + seed % 4;
        const auto x = random_ginibre({n, seed});
        const auto y = random_ginibre({n, seed + 100});
        const auto u = random_unitary({n, seed + 200});
        for (const auto& spec : kNorms) {
            const double w = omega_n(spec, x).value;
            const double tol = 1e-9 * std::max(1.0, w);
            CHECK(std::abs(omega_n(spec, rotate(x, 1.234)).value - w) <= tol);
            CHECK(std::abs(omega_n(spec, x * Complex(-2.5, 0.0)).value - 2.5 * w) <= 2.5 * tol);
            CHECK(std::abs(omega_n(spec, x.adjoint()).value - w) <= tol);
            CHECK(std::abs(omega_n(spec, u * x * u.adjoint()).value - w) <= tol);

            const auto sum = omega_n(spec, x + y);
            CHECK(sum.value <= w + omega_n(spec, y).upper() + tol);

            const double nx = evaluate_norm(spec, x);
            CHECK(0.5 * nx <= omega_n(spec, x).upper() * (1.0 + 1e-12));
            CHECK(w <= nx * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("degenerate and invalid inputs") {
    const auto zero = omega_n(NormSpec::op(), ComplexMatrix(3));
    CHECK(zero.value == 0.0);
    CHECK(zero.cert_error == 0.0);

    const auto one = omega_n(NormSpec::op(), ComplexMatrix::from_rows({{Complex(3.0, -4.0)}}));
    CHECK(one.value == doctest::Approx(5.0).epsilon(1e-10));

    const auto x = random_ginibre({3, 1});
    CHECK_THROWS_AS(omega_n(NormSpec::op(), x, 4), std::invalid_argument);
    CHECK_THROWS_AS(omega_n(NormSpec::op(), x, 64, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(omega_n(NormSpec::op(), ComplexMatrix()), std::invalid_argument);
}

TEST_CASE("support points trace the boundary of the numerical range") {
    const auto x = random_ginibre({4, 3});
    const double w = omega(x).upper();
    const auto boundary = numerical_range_boundary(x, 64);
    CHECK(boundary.size() == 64);
    const auto parts = cartesian_decompose(x);
    for (const auto& p : boundary) {
        CHECK(std::abs(p.boundary_point) <= w * (1.0 + 1e-9));
        // The support function in direction theta is lambda_max(Re(e^{-i theta} X)).
        const double h = herm_eigenvalues(rotated_real_part(parts, -p.theta)).back();
        CHECK((std::polar(1.0, -p.theta) * p.boundary_point).real() == doctest::Approx(h).epsilon(1e-10));
        double norm2 = 0.0;
        for (const auto& c : p.vector) norm2 += std::norm(c);
        CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(numerical_range_boundary(x, 3), std::invalid_argument);

    // A Hermitian matrix has the real segment [lambda_min, lambda_max] as its range.
    const auto h = ComplexMatrix::diagonal(std::vector<Complex>{-1.0, 2.0});
    CHECK(support_point(h, 0.0).boundary_point.real() == doctest::Approx(2.0));
    CHECK(support_point(h, std::numbers::pi).boundary_point.real() == doctest::Approx(-1.0));
}

} // TEST_SUITE
