#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qls/errors.hpp"

namespace qls {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Conjugate transpose.
    ComplexMatrix dagger() const;

    bool is_square() const { return rows_ == cols_; }
    bool is_hermitian(double tol = 1e-12) const;
    bool is_unitary(double tol = 1e-10) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ComplexVector data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);
ComplexMatrix operator*(Complex scale, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude of a - b; the matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);

double norm(const ComplexVector& v);
/// sum_i conj(v_i) * w_i
Complex inner_product(const ComplexVector& v, const ComplexVector& w);
ComplexVector normalized(const ComplexVector& v);
bool is_normalized(const ComplexVector& v, double tol = 1e-10);

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, matching orthonormal eigenvectors as columns.
struct EigenSystem {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
EigenSystem hermitian_eig(const ComplexMatrix& a);

/// exp(i*A*t) for Hermitian A, via the spectral decomposition.
ComplexMatrix exp_iAt(const ComplexMatrix& a, double t);

/// Gaussian elimination with partial pivoting.
ComplexVector classical_solve(const ComplexMatrix& a, const ComplexVector& b);

/// max|lambda| / min|lambda| over the eigenvalues of a Hermitian matrix.
double condition_number(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// |<v|w>| for normalized vectors of equal dimension.
double fidelity(const ComplexVector& v, const ComplexVector& w);

}  // namespace qls
