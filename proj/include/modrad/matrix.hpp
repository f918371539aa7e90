#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "modrad/errors.hpp"

namespace modrad {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. The single carrier type for
/// algebra elements, module elements and assembled linking-algebra matrices.
/// Immutable use is the norm: operations return fresh values.
class CMatrix {
public:
    CMatrix(std::size_t rows, std::size_t cols);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return entries_; }

    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator-() const;
    CMatrix operator*(const CMatrix& other) const;  // matrix product
    CMatrix operator*(Complex scalar) const;

    /// Copies `block` into this matrix with its top-left corner at (row0, col0).
    void set_block(std::size_t row0, std::size_t col0, const CMatrix& block);

    bool all_finite() const;
    double frobenius_norm() const;
    double max_abs() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

inline CMatrix operator*(Complex scalar, const CMatrix& m) { return m * scalar; }

/// Conjugate transpose.
CMatrix adjoint(const CMatrix& m);

/// Largest entrywise deviation |a_ij - b_ij|; shapes must match.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

}  // namespace modrad
