#include "modrad/matrix.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace modrad {

namespace {

void require_positive(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw ZeroDimensionError("matrix dimensions must be positive, got " +
                                 std::to_string(rows) + "x" + std::to_string(cols));
    }
}

void require_same_shape(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatchError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                                 std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                                 "x" + std::to_string(b.cols()));
    }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
    require_positive(rows, cols);
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_positive(rows, cols);
    if (entries_.size() != rows_ * cols_) {
        throw ShapeMismatchError("entry count " + std::to_string(entries_.size()) +
                                 " does not match " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_));
    }
    if (!all_finite()) {
        throw Error("matrix entries must be finite");
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    require_same_shape(*this, other);
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    require_same_shape(*this, other);
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

CMatrix CMatrix::operator-() const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    if (cols_ != other.rows_) {
        throw ShapeMismatchError("cannot multiply " + std::to_string(rows_) + "x" +
                                 std::to_string(cols_) + " by " + std::to_string(other.rows_) +
                                 "x" + std::to_string(other.cols_));
    }
    CMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += aik * other(k, j);
            }
        }
    }
    return out;
}

CMatrix CMatrix::operator*(Complex scalar) const {
    CMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = scalar * entries_[k];
    return out;
}

void CMatrix::set_block(std::size_t row0, std::size_t col0, const CMatrix& block) {
    if (row0 + block.rows() > rows_ || col0 + block.cols() > cols_) {
        throw ShapeMismatchError("block does not fit at the requested offset");
    }
    for (std::size_t i = 0; i < block.rows(); ++i) {
        for (std::size_t j = 0; j < block.cols(); ++j) {
            (*this)(row0 + i, col0 + j) = block(i, j);
        }
    }
}

bool CMatrix::all_finite() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

double CMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) sum += std::norm(z);
    return std::sqrt(sum);
}

double CMatrix::max_abs() const {
    double mx = 0.0;
    for (const Complex& z : entries_) mx = std::max(mx, std::abs(z));
    return mx;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(j, i) = std::conj(m(i, j));
        }
    }
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b);
    double mx = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        mx = std::max(mx, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return mx;
}

}  // namespace modrad
