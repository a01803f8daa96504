#include "braidgen/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace braidgen {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cxd aik = a_[i * cols_ + k];
            if (aik == cxd{}) continue;
            const cxd* brow = &rhs.a_[k * rhs.cols_];
            cxd* orow = &out.a_[i * rhs.cols_];
            for (std::size_t j = 0; j < rhs.cols_; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

Matrix Matrix::operator*(cxd scale) const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * scale;
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("Matrix add: shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("Matrix subtract: shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - rhs.a_[i];
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = std::conj(a_[i * cols_ + j]);
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const cxd& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double Matrix::max_abs_diff(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i)
        m = std::max(m, std::abs(a_[i] - rhs.a_[i]));
    return m;
}

// Cyclic Jacobi for Hermitian matrices. Off-diagonal entries are annihilated
// pairwise with complex Givens rotations until the off-diagonal mass is
// negligible relative to the diagonal scale.
std::vector<double> hermitian_eigenvalues(Matrix a) {
    const std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
    if (n == 0) return {};

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    const double tol = 1e-30 * scale;
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= tol) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cxd apq = a(p, q);
                if (std::abs(apq) <= tol) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Unitary 2x2: [c, s; -conj(s), c] with s = e^{i phi} * sin
                const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), aqq - app);
                const double c = std::cos(theta);
                const cxd s = std::sin(theta) * (apq / std::abs(apq));

                for (std::size_t k = 0; k < n; ++k) {
                    const cxd akp = a(k, p);
                    const cxd akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cxd apk = a(p, k);
                    const cxd aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::vector<double> singular_values(const Matrix& a) {
    Matrix gram = a.adjoint() * a;
    std::vector<double> ev = hermitian_eigenvalues(std::move(gram));
    std::vector<double> sv(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i)
        sv[i] = std::sqrt(std::max(0.0, ev[ev.size() - 1 - i]));
    return sv;
}

double spectral_norm(const Matrix& a) {
    if (a.empty()) return 0.0;
    return singular_values(a).front();
}

double smallest_singular_value(const Matrix& a) {
    if (a.empty()) return 0.0;
    return singular_values(a).back();
}

double unitarity_residual(const Matrix& u) {
    return spectral_norm(u * u.adjoint() - Matrix::identity(u.rows()));
}

} // namespace braidgen
