#ifndef BRAIDGEN_MATRIX_HPP
#define BRAIDGEN_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace braidgen {

using cxd = std::complex<double>;

// Dense row-major complex matrix. Sized for fusion spaces (side <= a few
// hundred), so everything here is straightforward O(n^3) dense algebra.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    cxd& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cxd& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    const std::vector<cxd>& data() const { return a_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator*(cxd scale) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix adjoint() const;

    // Largest |entry|; handy for element-wise comparisons in tests.
    double max_abs() const;
    double max_abs_diff(const Matrix& rhs) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cxd> a_;
};

// Eigenvalues of a Hermitian matrix, ascending, by cyclic complex Jacobi
// rotations. The input must be Hermitian to machine accuracy.
std::vector<double> hermitian_eigenvalues(Matrix a);

// Singular values of a general matrix, descending (sqrt of eigenvalues of
// A^dagger A).
std::vector<double> singular_values(const Matrix& a);

// Largest singular value.
double spectral_norm(const Matrix& a);

// Smallest singular value (of a square or tall matrix).
double smallest_singular_value(const Matrix& a);

// ||U U^dagger - I|| in spectral norm.
double unitarity_residual(const Matrix& u);

} // namespace braidgen

#endif
