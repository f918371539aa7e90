#pragma once

#include <vector>

#include "modrad/matrix.hpp"

namespace modrad {
namespace linalg {

/// Relative gate for accepting a matrix as Hermitian.
inline constexpr double kHermTol = 1e-10;
/// Relative tolerance for norm identities (C*-identity and friends).
inline constexpr double kRelTol = 1e-9;
/// Absolute tolerance, to be scaled by the largest norm in an expression.
inline constexpr double kAbsTol = 1e-9;

/// All eigenvalues of a Hermitian matrix, ascending. Cyclic complex Jacobi;
/// closed forms at sizes 1 and 2. Throws NotSquareError / NotHermitianError.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

/// Largest eigenvalue of a Hermitian matrix.
double hermitian_max_eigenvalue(const CMatrix& m);

/// Operator norm of a Hermitian matrix: max |eigenvalue|.
double hermitian_norm(const CMatrix& m);

/// Largest singular value, computed as sqrt(lambda_max(M* M)).
double operator_norm(const CMatrix& m);

/// Full complex spectrum via Householder Hessenberg reduction followed by
/// shifted QR iteration with deflation. Throws NotSquareError.
std::vector<Complex> eigenvalues(const CMatrix& m);

/// Max |eigenvalue| over the full spectrum.
double spectral_radius(const CMatrix& m);

/// Real symmetric 2x2 matrix [[p, s],[s, q]] with nonnegative entries.
struct Sym2x2 {
    double p;
    double s;
    double q;
};

/// Operator norm of a Sym2x2: (p + q + sqrt((p-q)^2 + 4 s^2)) / 2.
/// Throws NegativeEntryError if any entry is negative (or NaN).
double sym2x2_norm(const Sym2x2& b);

}  // namespace linalg
}  // namespace modrad
