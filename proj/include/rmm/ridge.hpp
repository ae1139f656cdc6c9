#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "rmm/types.hpp"

namespace rmm {

/// Raised when an unregularized normal matrix cannot be inverted.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accumulates the normal equations F F^T and Y F^T of a ridge problem one
/// block of samples at a time, so pooled fits over many sequences never
/// materialize the full design matrix. Blocks are given one sample per row.
template <typename Scalar>
class NormalEquations {
 public:
  NormalEquations(Index feature_dim, Index target_dim)
      : gram_(Matrix<Scalar>::Zero(feature_dim, feature_dim)),
        cross_(Matrix<Scalar>::Zero(target_dim, feature_dim)) {}

  template <typename FDerived, typename YDerived>
  void add_rows(const Eigen::MatrixBase<FDerived>& features,
                const Eigen::MatrixBase<YDerived>& targets) {
    require_dims(features.rows() == targets.rows(),
                 "ridge: features and targets must have the same sample count");
    require_dims(features.cols() == gram_.rows(),
                 "ridge: feature dimension mismatch");
    require_dims(targets.cols() == cross_.rows(),
                 "ridge: target dimension mismatch");
    gram_.template selfadjointView<Eigen::Lower>().rankUpdate(
        features.transpose());
    cross_.noalias() += targets.transpose() * features;
    samples_ += features.rows();
  }

  Index samples() const { return samples_; }
  Index feature_dim() const { return gram_.rows(); }
  Index target_dim() const { return cross_.rows(); }

  /// Theta = Y F^T (F F^T + lambda I)^-1, a target_dim x feature_dim matrix.
  /// The first `unpenalized` features (intercept columns) are exempt from
  /// the penalty.
  Matrix<Scalar> solve(Scalar lambda, Index unpenalized = 0) const {
    if (lambda < Scalar(0))
      throw std::invalid_argument("ridge: regularization must be nonnegative");
    if (samples_ < 1)
      throw std::invalid_argument("ridge: at least one sample is required");
    Matrix<Scalar> A = gram_.template selfadjointView<Eigen::Lower>();
    require_dims(unpenalized >= 0 && unpenalized <= A.rows(),
                 "ridge: unpenalized count exceeds feature dimension");
    A.diagonal().tail(A.rows() - unpenalized).array() += lambda;
    Eigen::LDLT<Matrix<Scalar>> ldlt(A);
    const Scalar tiny = Scalar(A.rows()) * std::numeric_limits<Scalar>::epsilon();
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        (lambda == Scalar(0) &&
         (ldlt.rcond() <= tiny || ldlt.vectorD().cwiseAbs().minCoeff() <=
                                      tiny * ldlt.vectorD().cwiseAbs().maxCoeff()))) {
      throw SingularSystemError(
          "ridge: normal matrix is singular; use a regularization lambda > 0");
    }
    return ldlt.solve(cross_.transpose()).transpose();
  }

 private:
  Matrix<Scalar> gram_;   // lower triangle of F F^T
  Matrix<Scalar> cross_;  // Y F^T
  Index samples_ = 0;
};

/// Minimizer of ||Theta F - Y||^2 + lambda ||Theta||^2 where the columns of
/// F (d x N) and Y (L x N) are paired samples.
template <typename FDerived, typename YDerived>
Matrix<typename FDerived::Scalar> ridge_fit(
    const Eigen::MatrixBase<FDerived>& F, const Eigen::MatrixBase<YDerived>& Y,
    typename FDerived::Scalar lambda) {
  using Scalar = typename FDerived::Scalar;
  require_dims(F.cols() == Y.cols(),
               "ridge_fit: F and Y must have the same column count");
  NormalEquations<Scalar> normal(F.rows(), Y.rows());
  normal.add_rows(F.transpose(), Y.transpose());
  return normal.solve(lambda);
}

}  // namespace rmm
