#pragma once

// Dense complex vectors and matrices sized for small qubit registers,
// plus the Hermitian eigensolver used by trace_distance and the
// positive-semidefinite check. Self-contained: no BLAS/LAPACK.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qske {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, CVector data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("CMatrix: data size does not match shape");
        }
    }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const CVector& data() const { return data_; }
    CVector& data() { return data_; }

    bool same_shape(const CMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    CVector data_;
};

inline CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

inline CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("matrix sum: shape mismatch");
    CMatrix out = a;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

inline CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("matrix difference: shape mismatch");
    CMatrix out = a;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

inline CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix out = a;
    for (auto& z : out.data()) z *= s;
    return out;
}

inline CMatrix adjoint(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const Complex v = a(ar, ac);
            if (v == Complex{}) continue;
            for (std::size_t br = 0; br < b.rows(); ++br) {
                for (std::size_t bc = 0; bc < b.cols(); ++bc) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
                }
            }
        }
    }
    return out;
}

inline Complex trace(const CMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace: matrix not square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

inline double max_abs(const CMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

inline bool is_finite(const CMatrix& a) {
    for (const auto& z : a.data()) {
        if (!is_finite(z)) return false;
    }
    return true;
}

inline double hermiticity_defect(const CMatrix& a) {
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return m;
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
// `a` is row-major n x n and is destroyed.
inline std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
    double scale = 0.0;
    for (std::size_t i = 0; i < n * n; ++i) scale += a[i] * a[i];
    const double stop = 1e-28 * std::max(1.0, scale);

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
        }
        if (off <= stop) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    return eig;
}

// Eigenvalues of a complex Hermitian matrix. Works on the standard real
// embedding [[Re, -Im], [Im, Re]], whose spectrum is that of H with every
// eigenvalue doubled; the doubles are collapsed after sorting.
inline std::vector<double> hermitian_eigenvalues(const CMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
    const std::size_t n = h.rows();
    std::vector<double> r(4 * n * n, 0.0);
    const std::size_t m = 2 * n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex z = h(i, j);
            r[i * m + j] = z.real();
            r[(i + n) * m + (j + n)] = z.real();
            r[(i + n) * m + j] = z.imag();
            r[i * m + (j + n)] = -z.imag();
        }
    }
    std::vector<double> doubled = symmetric_eigenvalues(std::move(r), m);
    std::sort(doubled.begin(), doubled.end());
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = doubled[2 * i];
    return eig;
}

// True iff h + shift*I is positive definite (Cholesky pivots all positive),
// i.e. every eigenvalue of h exceeds -shift.
inline bool is_positive_semidefinite(const CMatrix& h, double shift) {
    const std::size_t n = h.rows();
    CMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += shift;
    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Complex diag = a(j, j);
        for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
        if (diag.real() <= 0.0) return false;
        const double ljj = std::sqrt(diag.real());
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex v = a(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * std::conj(l(j, k));
            l(i, j) = v / ljj;
        }
    }
    return true;
}

}  // namespace qske
