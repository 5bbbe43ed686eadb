#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sector_radius {

using Complex = std::complex<double>;

/**
 * @brief Dense n x n complex matrix stored row-major.
 *
 * Every constructor that accepts external data checks that the entry count is
 * n*n and that each entry is finite. Arithmetic results are not re-checked.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n);
    ComplexMatrix(std::size_t n, std::vector<Complex> entries);

    static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n); }
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix ones(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> d);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    Complex& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * n_ + j]; }

    std::span<Complex> entries() noexcept { return a_; }
    std::span<const Complex> entries() const noexcept { return a_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// Largest |a_ij - conj(a_ji)|.
    double hermitian_defect() const;
    bool is_hermitian(double tol) const;
    bool all_finite() const;
    std::vector<Complex> diag() const;
    /// Largest |a_jj|.
    double max_abs_diagonal() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex s) { return m *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

    bool operator==(const ComplexMatrix&) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<Complex> a_;
};

struct CartesianParts {
    ComplexMatrix re;
    ComplexMatrix im;
};

/// X = Re X + i Im X with Re X = (X + X*)/2 and Im X = (X - X*)/(2i).
CartesianParts cartesian_decompose(const ComplexMatrix& x);
ComplexMatrix real_part(const ComplexMatrix& x);
ComplexMatrix imag_part(const ComplexMatrix& x);

/// Entrywise (Schur) product.
ComplexMatrix hadamard(const ComplexMatrix& x, const ComplexMatrix& y);

/// [[a, b], [c, d]] as a 2n x 2n matrix.
ComplexMatrix block2x2(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c,
                       const ComplexMatrix& d);

/// cos(theta) Re X - sin(theta) Im X, which is Re(e^{i theta} X).
ComplexMatrix rotated_real_part(const CartesianParts& parts, double theta);

/// e^{i phi} X.
ComplexMatrix rotate(const ComplexMatrix& x, double phi);

/// v* X v for a vector of length n.
Complex quadratic_form(const ComplexMatrix& x, std::span<const Complex> v);

} // namespace sector_radius
