#include <doctest.h>

#include <cmath>
#include <limits>

#include "sector_radius/error.hpp"
#include "sector_radius/generator.hpp"
#include "sector_radius/matrix.hpp"

using namespace sector_radius;

TEST_SUITE("core-linalg") {

TEST_CASE("construction validates size and finiteness") {
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), DimensionError);
    std::vector<Complex> bad(4);
    bad[2] = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS_AS(ComplexMatrix(2, bad), DomainError);
    bad[2] = Complex(0.0, std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(ComplexMatrix(2, bad), DomainError);

    const auto m = ComplexMatrix::from_rows({{1.0, Complex(0.0, 2.0)}, {3.0, 4.0}});
    CHECK(m.size() == 2);
    CHECK(m(0, 1) == Complex(0.0, 2.0));
    CHECK(m(1, 0) == Complex(3.0, 0.0));
    CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), DimensionError);
}

TEST_CASE("arithmetic rejects mismatched sizes") {
    const auto a = ComplexMatrix::identity(2);
    const auto b = ComplexMatrix::identity(3);
    CHECK_THROWS_AS(a + b, DimensionError);
    CHECK_THROWS_AS(a * b, DimensionError);
    CHECK_THROWS_AS(hadamard(a, b), DimensionError);
}

TEST_CASE("product, adjoint and trace on a fixed example") {
    const auto a = ComplexMatrix::from_rows({{1.0, Complex(0.0, 1.0)}, {2.0, 0.0}});
    const auto b = ComplexMatrix::from_rows({{0.0, 1.0}, {Complex(1.0, -1.0), 3.0}});
    const auto p = a * b;
    CHECK(p(0, 0) == Complex(1.0, 1.0));
    CHECK(p(0, 1) == Complex(1.0, 3.0));
    CHECK(p(1, 0) == Complex(0.0, 0.0));
    CHECK(p(1, 1) == Complex(2.0, 0.0));
    CHECK(a.adjoint()(0, 1) == Complex(2.0, 0.0));
    CHECK(a.adjoint()(1, 0) == Complex(0.0, -1.0));
    CHECK(p.trace() == Complex(3.0, 1.0));
}

TEST_CASE("Cartesian decomposition reconstructs X with Hermitian parts") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto x = random_ginibre({1 + seed % 7, seed});
        const auto parts = cartesian_decompose(x);
        CHECK(parts.re.hermitian_defect() == 0.0);
        CHECK(parts.im.hermitian_defect() == 0.0);
        const auto back = parts.re + parts.im * Complex(0.0, 1.0);
        CHECK((back - x).frobenius_norm() <= 1e-15 * x.frobenius_norm());
    }
}

TEST_CASE("rotated real part equals Re(e^{i theta} X)") {
    const auto x = random_ginibre({4, 9});
    const auto parts = cartesian_decompose(x);
    for (double theta : {0.0, 0.3, 1.7, 3.0, -2.2}) {
        const auto direct = real_part(x * std::polar(1.0, theta));
        CHECK((rotated_real_part(parts, theta) - direct).frobenius_norm() <= 1e-14 * x.frobenius_norm());
        CHECK((real_part(rotate(x, theta)) - direct).frobenius_norm() <= 1e-14 * x.frobenius_norm());
    }
}

TEST_CASE("Hadamard product and diagonal helpers") {
    const auto x = ComplexMatrix::from_rows({{Complex(1.0, 1.0), 2.0}, {3.0, Complex(0.0, -4.0)}});
    const auto y = ComplexMatrix::from_rows({{2.0, Complex(0.0, 1.0)}, {0.0, 1.0}});
    const auto h = hadamard(x, y);
    CHECK(h(0, 0) == Complex(2.0, 2.0));
    CHECK(h(0, 1) == Complex(0.0, 2.0));
    CHECK(h(1, 0) == Complex(0.0, 0.0));
    CHECK(h(1, 1) == Complex(0.0, -4.0));
    CHECK(x.max_abs_diagonal() == doctest::Approx(4.0));
    CHECK(hadamard(x, ComplexMatrix::identity(2)) == ComplexMatrix::diagonal(x.diag()));
}

TEST_CASE("2x2 block assembly") {
    const auto a = ComplexMatrix::identity(2);
    const auto b = ComplexMatrix::ones(2);
    const auto m = block2x2(a, b, b * Complex(2.0, 0.0), a * Complex(3.0, 0.0));
    CHECK(m.size() == 4);
    CHECK(m(0, 0) == Complex(1.0, 0.0));
    CHECK(m(0, 3) == Complex(1.0, 0.0));
    CHECK(m(3, 0) == Complex(2.0, 0.0));
    CHECK(m(3, 3) == Complex(3.0, 0.0));
    CHECK(m(2, 3) == Complex(0.0, 0.0));
}

TEST_CASE("quadratic form") {
    const auto x = ComplexMatrix::from_rows({{1.0, Complex(0.0, 1.0)}, {0.0, 2.0}});
    const std::vector<Complex> v{Complex(1.0, 0.0), Complex(0.0, 1.0)};
    // x00 + x01 v1 + x11 |v1|^2 = 1 + i * i + 2
    CHECK(std::abs(quadratic_form(x, v) - Complex(2.0, 0.0)) < 1e-15);
    CHECK_THROWS_AS(quadratic_form(x, std::vector<Complex>(3)), DimensionError);
}

TEST_CASE("Frobenius norm avoids overflow") {
    auto big = ComplexMatrix::identity(2) * Complex(1e200, 0.0);
    CHECK(big.frobenius_norm() == doctest::Approx(std::sqrt(2.0) * 1e200));
}

} // TEST_SUITE
