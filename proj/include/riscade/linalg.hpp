#ifndef RISCADE_LINALG_HPP
#define RISCADE_LINALG_HPP

#include <Eigen/Dense>

namespace riscade {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Kronecker product: block (i,j) of the result is a(i,j) * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column-wise Khatri-Rao product: column j of the result is
/// a.col(j) (x) b.col(j). Throws std::invalid_argument when the column
/// counts differ. The row-wise variant is obtained through transposes.
CMatrix khatri_rao_cols(const CMatrix& a, const CMatrix& b);

/// Column-major stacking of a matrix into a vector.
CVector vec(const CMatrix& m);

/// Inverse of vec for known dimensions.
CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols);

/// Solves a * x = b for Hermitian positive definite a via Cholesky.
/// The input is symmetrized against roundoff before factoring, and one
/// refinement pass keeps the relative residual near machine level for
/// condition numbers up to ~1e8. Throws std::runtime_error when the
/// factorization fails (a not positive definite).
CMatrix hermitian_solve(const CMatrix& a, const CMatrix& b);

bool all_finite(const CMatrix& m);

} // namespace riscade

#endif
