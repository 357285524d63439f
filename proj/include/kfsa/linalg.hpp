#pragma once

#include <cmath>
#include <limits>

#include "kfsa/types.hpp"

namespace kfsa {

// Pseudo-inverse of a symmetric PSD matrix. Eigenvalues below
// rel_tol * lambda_max are truncated to zero.
inline Matrix pinv_psd(const Matrix& M, double rel_tol = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(M);
  if (es.info() != Eigen::Success) throw numerical_error("eigendecomposition failed");
  const Vector& ev = es.eigenvalues();
  const double lmax = ev.cwiseAbs().maxCoeff();
  if (lmax == 0.0) return Matrix::Zero(M.rows(), M.cols());
  const double cutoff = rel_tol * lmax;
  Vector inv(ev.size());
  for (Index i = 0; i < ev.size(); ++i) inv[i] = ev[i] > cutoff ? 1.0 / ev[i] : 0.0;
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
}

// Solves X * M = B for symmetric positive definite M, i.e. X = B M^{-1}.
// Falls back to the truncated-eigenvalue pseudo-inverse when Cholesky fails,
// which yields the minimum-Frobenius-norm solution on rank-deficient systems.
inline Matrix solve_spd_right(const Matrix& M, const Matrix& B) {
  Eigen::LLT<Matrix> llt(M);
  if (llt.info() == Eigen::Success) {
    Matrix X = llt.solve(B.transpose()).transpose();
    if (X.allFinite()) return X;
  }
  Matrix X = B * pinv_psd(M);
  if (!X.allFinite()) throw numerical_error("linear solve produced non-finite values");
  return X;
}

inline double relative_frobenius_error(const Matrix& A, const Matrix& reference) {
  const double denom = reference.norm();
  if (denom == 0.0) return A.norm() == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (A - reference).norm() / denom;
}

}  // namespace kfsa
