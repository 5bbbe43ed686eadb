#include "sector_radius/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sector_radius/error.hpp"

namespace sector_radius {

namespace {

void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.size() != b.size()) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()) + ")");
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_) {
        throw DimensionError("ComplexMatrix: expected " + std::to_string(n_ * n_) + " entries, got " +
                             std::to_string(a_.size()));
    }
    if (!all_finite()) {
        throw DomainError("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::ones(std::size_t n) {
    ComplexMatrix m(n);
    std::fill(m.a_.begin(), m.a_.end(), Complex(1.0, 0.0));
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    if (!m.all_finite()) throw DomainError("ComplexMatrix::diagonal: non-finite entry");
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    std::vector<Complex> entries;
    entries.reserve(n * n);
    for (const auto& row : rows) {
        if (row.size() != n) throw DimensionError("ComplexMatrix::from_rows: matrix is not square");
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return ComplexMatrix(n, std::move(entries));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    // Scaled sum of squares; entries can be large after products.
    double scale = 0.0;
    for (const auto& z : a_) scale = std::max({scale, std::abs(z.real()), std::abs(z.imag())});
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const auto& z : a_) {
        const double re = z.real() / scale;
        const double im = z.imag() / scale;
        sum += re * re + im * im;
    }
    return scale * std::sqrt(sum);
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i; j < n_; ++j)
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const { return hermitian_defect() <= tol; }

bool ComplexMatrix::all_finite() const {
    return std::all_of(a_.begin(), a_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

std::vector<Complex> ComplexMatrix::diag() const {
    std::vector<Complex> d(n_);
    for (std::size_t i = 0; i < n_; ++i) d[i] = (*this)(i, i);
    return d;
}

double ComplexMatrix::max_abs_diagonal() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) m = std::max(m, std::abs((*this)(i, i)));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_size(*this, rhs, "operator+");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_size(*this, rhs, "operator-");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_size(a, b, "operator*");
    const std::size_t n = a.size();
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

CartesianParts cartesian_decompose(const ComplexMatrix& x) {
    const std::size_t n = x.size();
    CartesianParts parts{ComplexMatrix(n), ComplexMatrix(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex a = x(i, j);
            const Complex b = std::conj(x(j, i));
            parts.re(i, j) = 0.5 * (a + b);
            // (a - b) / (2i) = -i (a - b) / 2
            const Complex d = a - b;
            parts.im(i, j) = Complex(0.5 * d.imag(), -0.5 * d.real());
        }
    }
    return parts;
}

ComplexMatrix real_part(const ComplexMatrix& x) { return cartesian_decompose(x).re; }

ComplexMatrix imag_part(const ComplexMatrix& x) { return cartesian_decompose(x).im; }

ComplexMatrix hadamard(const ComplexMatrix& x, const ComplexMatrix& y) {
    require_same_size(x, y, "hadamard");
    ComplexMatrix z(x.size());
    auto zx = z.entries();
    auto xs = x.entries();
    auto ys = y.entries();
    for (std::size_t k = 0; k < zx.size(); ++k) zx[k] = xs[k] * ys[k];
    return z;
}

ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d) {
    require_same_size(a, b, "block2x2");
    require_same_size(a, c, "block2x2");
    require_same_size(a, d, "block2x2");
    const std::size_t n = a.size();
    ComplexMatrix m(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = a(i, j);
            m(i, j + n) = b(i, j);
            m(i + n, j) = c(i, j);
            m(i + n, j + n) = d(i, j);
        }
    }
    return m;
}

ComplexMatrix rotated_real_part(const CartesianParts& parts, double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const std::size_t n = parts.re.size();
    ComplexMatrix h(n);
    auto hs = h.entries();
    auto rs = parts.re.entries();
    auto is = parts.im.entries();
    for (std::size_t k = 0; k < hs.size(); ++k) hs[k] = c * rs[k] - s * is[k];
    return h;
}

ComplexMatrix rotate(const ComplexMatrix& x, double phi) { return x * std::polar(1.0, phi); }

Complex quadratic_form(const ComplexMatrix& x, std::span<const Complex> v) {
    const std::size_t n = x.size();
    if (v.size() != n) throw DimensionError("quadratic_form: vector length mismatch");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Complex row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += x(i, j) * v[j];
        acc += std::conj(v[i]) * row;
    }
    return acc;
}

} // namespace sector_radius
