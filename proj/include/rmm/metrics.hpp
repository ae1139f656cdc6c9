#pragma once

#include <cmath>
#include <span>

#include "rmm/types.hpp"

namespace rmm {

/// Root mean square error over every scalar entry.
template <typename ADerived, typename BDerived>
typename ADerived::Scalar rmse(const Eigen::MatrixBase<ADerived>& Y,
                               const Eigen::MatrixBase<BDerived>& Y_hat) {
  require_dims(Y.rows() == Y_hat.rows() && Y.cols() == Y_hat.cols(),
               "rmse: shapes differ");
  if (Y.size() == 0) return 0;
  return std::sqrt((Y - Y_hat).squaredNorm() /
                   static_cast<typename ADerived::Scalar>(Y.size()));
}

/// Running pooled RMSE over several sequences, as if they were concatenated.
template <typename Scalar>
class PooledRmse {
 public:
  template <typename ADerived, typename BDerived>
  void add(const Eigen::MatrixBase<ADerived>& Y,
           const Eigen::MatrixBase<BDerived>& Y_hat) {
    require_dims(Y.rows() == Y_hat.rows() && Y.cols() == Y_hat.cols(),
                 "rmse: shapes differ");
    sum_sq_ += (Y - Y_hat).squaredNorm();
    count_ += Y.size();
  }
  Scalar value() const {
    return count_ == 0 ? Scalar(0) : std::sqrt(sum_sq_ / Scalar(count_));
  }

 private:
  Scalar sum_sq_ = 0;
  Index count_ = 0;
};

}  // namespace rmm
