#include "qls/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qls {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kJacobiOffTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;
constexpr double kPivotTol = 1e-14;
constexpr double kSingularEigTol = 1e-12;

[[noreturn]] void fail(const std::string& msg) { throw ValidationError(msg); }

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) fail("from_rows: ragged row lengths");
        std::size_t j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (!is_square()) return false;
    const ComplexMatrix g = dagger() * (*this);
    return max_abs_diff(g, identity(rows_)) <= tol;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) fail("matrix product: inner dimensions differ");
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
    if (a.cols() != v.size()) fail("matrix-vector product: dimensions differ");
    ComplexVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix operator*(Complex scale, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = scale * a(i, j);
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail("matrix sum: shapes differ");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail("matrix difference: shapes differ");
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail("max_abs_diff: shapes differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double norm(const ComplexVector& v) {
    double s = 0.0;
    for (const Complex& x : v) s += std::norm(x);
    return std::sqrt(s);
}

Complex inner_product(const ComplexVector& v, const ComplexVector& w) {
    if (v.size() != w.size()) fail("inner_product: dimensions differ");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * w[i];
    return acc;
}

ComplexVector normalized(const ComplexVector& v) {
    const double n = norm(v);
    if (n == 0.0) fail("normalized: zero vector");
    ComplexVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

bool is_normalized(const ComplexVector& v, double tol) {
    double s = 0.0;
    for (const Complex& x : v) s += std::norm(x);
    return std::abs(s - 1.0) <= tol;
}

EigenSystem hermitian_eig(const ComplexMatrix& a) {
    if (!a.is_square()) fail("hermitian_eig: matrix must be square");
    if (!a.is_hermitian(kHermitianTol)) fail("hermitian_eig: matrix is not Hermitian");
    const std::size_t n = a.rows();

    // Work on the Hermitian average so the <=1e-12 input asymmetry cannot
    // accumulate through the sweeps.
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(frobenius_norm(m), 1e-300);
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(m(p, q));
        if (std::sqrt(off) <= kJacobiOffTol * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex beta = m(p, q);
                const double rho = std::abs(beta);
                if (rho == 0.0) continue;
                const double phi = std::arg(beta);
                const Complex ephi = std::polar(1.0, phi);

                // Real symmetric 2x2 rotation after phasing the pivot real.
                const double alpha = m(p, p).real();
                const double gamma = m(q, q).real();
                const double tau = (gamma - alpha) / (2.0 * rho);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Column update: [col_p col_q] *= [[c, s], [-s e^{-i phi}, c e^{-i phi}]]
                const Complex sl = s * std::conj(ephi);
                const Complex cl = c * std::conj(ephi);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mp = m(k, p), mq = m(k, q);
                    m(k, p) = c * mp - sl * mq;
                    m(k, q) = s * mp + cl * mq;
                }
                // Row update with the conjugate factors.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mp = m(p, k), mq = m(q, k);
                    m(p, k) = c * mp - s * ephi * mq;
                    m(q, k) = s * mp + c * ephi * mq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - sl * vq;
                    v(k, q) = s * vp + cl * vq;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }

    // Ascending eigenvalues, ties kept in sweep order.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return m(i, i).real() < m(j, j).real();
    });

    EigenSystem sys;
    sys.eigenvalues.resize(n);
    sys.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sys.eigenvalues[j] = m(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) sys.eigenvectors(i, j) = v(i, order[j]);
    }
    return sys;
}

ComplexMatrix exp_iAt(const ComplexMatrix& a, double t) {
    const EigenSystem sys = hermitian_eig(a);
    const std::size_t n = a.rows();
    ComplexMatrix phased = sys.eigenvectors;
    for (std::size_t j = 0; j < n; ++j) {
        const Complex phase = std::polar(1.0, sys.eigenvalues[j] * t);
        for (std::size_t i = 0; i < n; ++i) phased(i, j) *= phase;
    }
    return phased * sys.eigenvectors.dagger();
}

ComplexVector classical_solve(const ComplexMatrix& a, const ComplexVector& b) {
    if (!a.is_square()) fail("classical_solve: matrix must be square");
    const std::size_t n = a.rows();
    if (b.size() != n) fail("classical_solve: rhs dimension differs from matrix");

    ComplexMatrix m = a;
    ComplexVector rhs = b;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(m(i, col)) > std::abs(m(pivot, col))) pivot = i;
        if (std::abs(m(pivot, col)) < kPivotTol)
            throw SingularMatrixError("classical_solve: matrix is singular to working precision");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            std::swap(rhs[col], rhs[pivot]);
        }
        for (std::size_t i = col + 1; i < n; ++i) {
            const Complex f = m(i, col) / m(col, col);
            if (f == Complex{}) continue;
            m(i, col) = 0.0;
            for (std::size_t j = col + 1; j < n; ++j) m(i, j) -= f * m(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    ComplexVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Complex acc = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) acc -= m(i, j) * x[j];
        x[i] = acc / m(i, i);
    }
    return x;
}

double condition_number(const ComplexMatrix& a) {
    const EigenSystem sys = hermitian_eig(a);
    double lo = std::abs(sys.eigenvalues.front());
    double hi = lo;
    for (double lambda : sys.eigenvalues) {
        lo = std::min(lo, std::abs(lambda));
        hi = std::max(hi, std::abs(lambda));
    }
    if (lo < kSingularEigTol)
        throw SingularMatrixError("condition_number: eigenvalue is numerically zero");
    return hi / lo;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
    ComplexVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

double fidelity(const ComplexVector& v, const ComplexVector& w) {
    if (v.size() != w.size()) fail("fidelity: dimensions differ");
    if (!is_normalized(v) || !is_normalized(w)) fail("fidelity: vectors must be normalized");
    return std::min(std::abs(inner_product(v, w)), 1.0);
}

}  // namespace qls
