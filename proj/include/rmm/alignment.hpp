#pragma once

#include <stdexcept>
#include <vector>

#include "rmm/machine.hpp"
#include "rmm/types.hpp"

namespace rmm {

template <typename Scalar>
struct AlignmentResult {
  Matrix<Scalar> table;  // K x (T + 1); column T is the zero base case
  Scalar optimal_cost = 0;
  std::vector<ReadAction> actions;  // movement applied at each step
  std::vector<Index> positions;     // zero-based read position after each step
};

/// Backward dynamic program over read-head trajectories for a K x T table
/// of per-step costs cost(l, t) of reading slot l at step t:
///   d(l, t) = cost(l, t) + min{d(l, t+1), d(l+1 mod K, t+1), d(0, t+1)}
/// The head starts at slot 0 before the first step, so the best start is
/// min{d(0, 0), d(1, 0)}. Ties prefer stay, then increment, then reset.
template <typename Derived>
AlignmentResult<typename Derived::Scalar> align_costs(
    const Eigen::MatrixBase<Derived>& cost) {
  using Scalar = typename Derived::Scalar;
  const Index K = cost.rows();
  const Index T = cost.cols();
  if (K < 2)
    throw std::invalid_argument("align: memory size K must be at least 2");

  AlignmentResult<Scalar> out;
  out.table = Matrix<Scalar>::Zero(K, T + 1);
  auto& d = out.table;
  for (Index t = T - 1; t >= 0; --t) {
    for (Index l = 0; l < K; ++l) {
      d(l, t) = cost(l, t) +
                std::min({d(l, t + 1), d((l + 1) % K, t + 1), d(0, t + 1)});
    }
  }
  out.optimal_cost = std::min(d(0, 0), d(1, 0));
  if (T == 0) return out;

  out.actions.reserve(static_cast<std::size_t>(T));
  out.positions.reserve(static_cast<std::size_t>(T));
  Index pos = 0;
  for (Index t = 0; t < T; ++t) {
    ReadAction best = ReadAction::stay;
    Scalar best_cost = d(apply_read_action(pos, best, K), t);
    for (ReadAction a : {ReadAction::increment, ReadAction::reset}) {
      const Scalar c = d(apply_read_action(pos, a, K), t);
      if (c < best_cost) {
        best = a;
        best_cost = c;
      }
    }
    pos = apply_read_action(pos, best, K);
    out.actions.push_back(best);
    out.positions.push_back(pos);
  }
  return out;
}

/// Per-step read costs ||R m_{t,l} - y_t|| for a memory tensor M_1..M_T
/// (each K x n) against targets Y (T x L).
template <typename Scalar, typename YDerived, typename RDerived>
Matrix<Scalar> memory_read_costs(const std::vector<Matrix<Scalar>>& memory,
                                 const Eigen::MatrixBase<YDerived>& Y,
                                 const Eigen::MatrixBase<RDerived>& R) {
  const Index T = static_cast<Index>(memory.size());
  require_dims(Y.rows() == T, "align_memory: memory tensor and targets differ in length");
  const Index K = T > 0 ? memory.front().rows() : 0;
  Matrix<Scalar> cost(K, T);
  for (Index t = 0; t < T; ++t) {
    const auto& M = memory[static_cast<std::size_t>(t)];
    require_dims(M.rows() == K && M.cols() == R.cols() && R.rows() == Y.cols(),
                 "align_memory: memory, R and targets are inconsistent");
    // K x L block of reads mapped through R, minus the target row.
    cost.col(t) = ((M * R.transpose()).rowwise() - Y.row(t)).rowwise().norm();
  }
  return cost;
}

template <typename Scalar, typename YDerived, typename RDerived>
AlignmentResult<Scalar> align_memory(const std::vector<Matrix<Scalar>>& memory,
                                     const Eigen::MatrixBase<YDerived>& Y,
                                     const Eigen::MatrixBase<RDerived>& R) {
  if (!memory.empty() && memory.front().rows() < 2)
    throw std::invalid_argument("align: memory size K must be at least 2");
  return align_costs(memory_read_costs(memory, Y, R));
}

}  // namespace rmm
