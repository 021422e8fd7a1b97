// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace zonecal {

using cdouble = std::complex<double>;
using cvec = std::vector<cdouble>;

/// Dense complex matrix, row-major.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cdouble& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    cdouble* row(std::size_t i) { return data_.data() + i * cols_; }
    const cdouble* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::vector<cdouble>& data() { return data_; }
    const std::vector<cdouble>& data() const { return data_; }

    cvec col(std::size_t j) const {
        cvec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_col(std::size_t j, const cvec& v) {
        if (v.size() != rows_) throw std::invalid_argument("set_col: size mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cdouble> data_;
};

/// Conjugated inner product a^H b.
inline cdouble vdot(const cvec& a, const cvec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vdot: size mismatch");
    cdouble s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm_sq(const cvec& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s;
}

inline double norm(const cvec& v) { return std::sqrt(norm_sq(v)); }

inline cvec matvec(const CMatrix& m, const cvec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matvec: size mismatch");
    cvec out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cdouble* r = m.row(i);
        cdouble s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += r[j] * v[j];
        out[i] = s;
    }
    return out;
}

/// m^H v for tall m, i.e. projection coefficients onto the columns of m.
inline cvec adjoint_matvec(const CMatrix& m, const cvec& v) {
    if (m.rows() != v.size()) throw std::invalid_argument("adjoint_matvec: size mismatch");
    cvec out(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const cdouble* r = m.row(i);
        const cdouble vi = v[i];
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += std::conj(r[j]) * vi;
    }
    return out;
}

/// a^H b for tall matrices with equal row count.
inline CMatrix adjoint_product(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("adjoint_product: size mismatch");
    CMatrix out(a.cols(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const cdouble* ra = a.row(i);
        const cdouble* rb = b.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cdouble aji = std::conj(ra[j]);
            for (std::size_t k = 0; k < b.cols(); ++k) out(j, k) += aji * rb[k];
        }
    }
    return out;
}

inline double frobenius_norm(const CMatrix& m) {
    double s = 0.0;
    for (const auto& x : m.data()) s += std::norm(x);
    return std::sqrt(s);
}

inline double hermitian_defect(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_defect: not square");
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += std::norm(m(i, j) - std::conj(m(j, i)));
    return std::sqrt(s);
}

/// max_j | (m^H m)(i,j) - I(i,j) | — how far columns are from orthonormal.
inline double orthonormality_defect(const CMatrix& m) {
    double worst = 0.0;
    for (std::size_t i = 0; i < m.cols(); ++i) {
        for (std::size_t j = i; j < m.cols(); ++j) {
            cdouble s = 0.0;
            for (std::size_t r = 0; r < m.rows(); ++r)
                s += std::conj(m(r, i)) * m(r, j);
            const double want = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(s - want));
        }
    }
    return worst;
}

}  // namespace zonecal
