#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "rmm/alignment.hpp"
#include "rmm/machine.hpp"
#include "rmm/metrics.hpp"
#include "rmm/reservoir.hpp"
#include "rmm/ridge.hpp"
#include "rmm/tasks.hpp"

namespace rmm {

/// Ideal write schedule for one sequence.
struct WriteTargets {
  std::vector<Index> sources;  // tau_t per step: earliest best-matching input
  std::vector<Index> tau;      // sorted distinct sources
  std::vector<int> control;    // +1 at steps in tau, -1 elsewhere
};

/// For every output y_t, finds the earliest input x_tau with tau <= t that
/// minimizes ||R x_tau - y_t||, and marks those inputs for writing.
template <typename XDerived, typename YDerived, typename RDerived>
WriteTargets derive_write_targets(const Eigen::MatrixBase<XDerived>& X,
                                  const Eigen::MatrixBase<YDerived>& Y,
                                  const Eigen::MatrixBase<RDerived>& R) {
  using Scalar = typename XDerived::Scalar;
  const Index T = X.rows();
  require_dims(Y.rows() == T, "derive_write_targets: X and Y differ in length");
  require_dims(R.rows() == Y.cols() && R.cols() == X.cols(),
               "derive_write_targets: R must be L x n");

  const Matrix<Scalar> mapped = X * R.transpose();  // T x L
  WriteTargets out;
  out.sources.resize(static_cast<std::size_t>(T));
  out.control.assign(static_cast<std::size_t>(T), -1);
  for (Index t = 0; t < T; ++t) {
    Index best = 0;
    Scalar best_dist = (mapped.row(0) - Y.row(t)).squaredNorm();
    for (Index tau = 1; tau <= t; ++tau) {
      const Scalar dist = (mapped.row(tau) - Y.row(t)).squaredNorm();
      if (dist < best_dist) {
        best = tau;
        best_dist = dist;
      }
    }
    out.sources[static_cast<std::size_t>(t)] = best;
    out.control[static_cast<std::size_t>(best)] = +1;
  }
  for (Index t = 0; t < T; ++t)
    if (out.control[static_cast<std::size_t>(t)] > 0) out.tau.push_back(t);
  return out;
}

struct RmmTrainOptions {
  double lambda = 1e-6;
  Index memory_size = 16;
  int max_iters = 10;
  double tolerance = 1e-6;  // minimum absolute RMSE improvement
  bool intercept = true;    // fit unpenalized biases for heads and readout
};

template <typename Scalar>
struct FitReport {
  int iterations = 0;                // alternations executed
  std::vector<Scalar> loss_history;  // training RMSE of accepted alternations
  bool converged = false;            // stopped before max_iters
  RmmParams<Scalar> final_params;
};

namespace detail {

// [1 | a | b] with the leading ones column only when `intercept` is set.
template <typename Scalar>
Matrix<Scalar> design(const Matrix<Scalar>& a, const Matrix<Scalar>& b,
                      bool intercept) {
  const Index lead = intercept ? 1 : 0;
  Matrix<Scalar> out(a.rows(), lead + a.cols() + b.cols());
  if (intercept) out.col(0).setOnes();
  out.middleCols(lead, a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

template <typename Scalar>
void check_dataset(std::span<const TaskSample<Scalar>> data, Index n, Index L) {
  if (data.empty()) throw std::invalid_argument("training: empty dataset");
  for (const auto& s : data) {
    require_dims(s.inputs.rows() == s.targets.rows(),
                 "training: inputs and targets differ in length");
    require_dims(s.inputs.cols() == n && s.targets.cols() == L,
                 "training: samples have inconsistent dimensions");
  }
}

}  // namespace detail

/// Alternating optimization of the write head, read head and readout.
///
/// Each alternation derives ideal writes under the current R, regresses the
/// write head onto them, rolls the trained write head out to get memory
/// tensors, aligns those with the targets to label read-head moves,
/// regresses the read head onto the labels, and finally regresses (V, R)
/// on the resulting reads. The loop stops once the training RMSE rises (the
/// rising step is discarded), improves by less than `tolerance`, or after
/// `max_iters` alternations.
template <typename Scalar>
FitReport<Scalar> fit_rmm(const ReservoirWeights<Scalar>& weights,
                          std::span<const TaskSample<Scalar>> data,
                          const RmmTrainOptions& opt) {
  if (data.empty()) throw std::invalid_argument("fit_rmm: empty dataset");
  if (opt.memory_size < 2)
    throw std::invalid_argument("fit_rmm: memory_size must be at least 2");
  const Index n = data.front().inputs.cols();
  const Index L = data.front().targets.cols();
  const Index m = weights.size();
  detail::check_dataset(data, n, L);
  require_dims(weights.input_dim() == n, "fit_rmm: reservoir input dimension mismatch");
  const auto lambda = static_cast<Scalar>(opt.lambda);
  const Index lead = opt.intercept ? 1 : 0;
  if (opt.max_iters < 1) throw std::invalid_argument("fit_rmm: max_iters must be positive");

  std::vector<Sequence<Scalar>> states, head_features;
  states.reserve(data.size());
  head_features.reserve(data.size());
  for (const auto& s : data) {
    states.push_back(esn_run(weights, s.inputs));
    head_features.push_back(
        detail::design<Scalar>(s.inputs, states.back(), opt.intercept));
  }

  auto params = RmmParams<Scalar>::zeros(n, m, L, opt.memory_size);
  params.readout_memory = Matrix<Scalar>::Identity(L, n);

  FitReport<Scalar> report;
  Scalar prev_loss = std::numeric_limits<Scalar>::infinity();
  for (int iter = 0; iter < opt.max_iters; ++iter) {
    ++report.iterations;
    RmmParams<Scalar> next = params;

    NormalEquations<Scalar> write_eq(lead + n + m, 1);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto targets = derive_write_targets(data[i].inputs, data[i].targets,
                                                params.readout_memory);
      Vector<Scalar> control(static_cast<Index>(targets.control.size()));
      for (Index t = 0; t < control.size(); ++t)
        control(t) = Scalar(targets.control[static_cast<std::size_t>(t)]);
      write_eq.add_rows(head_features[i], control);
    }
    const Matrix<Scalar> write_theta = write_eq.solve(lambda, lead);
    next.write_bias = opt.intercept ? write_theta(0, 0) : Scalar(0);
    next.write_input = write_theta.middleCols(lead, n).transpose();
    next.write_state = write_theta.rightCols(m).transpose();

    NormalEquations<Scalar> read_eq(lead + n + m, 3);
    for (std::size_t i = 0; i < data.size(); ++i) {
      const auto rollout = rmm_run_on_states(next, data[i].inputs, states[i]);
      std::vector<Matrix<Scalar>> memory;
      memory.reserve(rollout.states.size());
      for (const auto& st : rollout.states) memory.push_back(st.memory);
      const auto alignment =
          align_memory(memory, data[i].targets, params.readout_memory);
      Matrix<Scalar> onehot = Matrix<Scalar>::Zero(data[i].length(), 3);
      for (Index t = 0; t < onehot.rows(); ++t)
        onehot(t, static_cast<int>(alignment.actions[static_cast<std::size_t>(t)])) =
            Scalar(1);
      read_eq.add_rows(head_features[i], onehot);
    }
    const Matrix<Scalar> read_theta = read_eq.solve(lambda, lead);
    next.read_bias = opt.intercept ? Vector<Scalar>(read_theta.col(0))
                                   : Vector<Scalar>::Zero(3);
    next.read_input = read_theta.middleCols(lead, n);
    next.read_state = read_theta.rightCols(m);

    std::vector<Sequence<Scalar>> reads;
    reads.reserve(data.size());
    NormalEquations<Scalar> out_eq(lead + m + n, L);
    for (std::size_t i = 0; i < data.size(); ++i) {
      reads.push_back(rmm_run_on_states(next, data[i].inputs, states[i],
                                        RolloutDetail::outputs_only)
                          .reads);
      out_eq.add_rows(
          detail::design<Scalar>(states[i], reads.back(), opt.intercept),
          data[i].targets);
    }
    const Matrix<Scalar> out_theta = out_eq.solve(lambda, lead);
    next.readout_bias = opt.intercept ? Vector<Scalar>(out_theta.col(0))
                                      : Vector<Scalar>::Zero(L);
    next.readout_state = out_theta.middleCols(lead, m);
    next.readout_memory = out_theta.rightCols(n);

    PooledRmse<Scalar> loss;
    for (std::size_t i = 0; i < data.size(); ++i) {
      Sequence<Scalar> predicted = states[i] * next.readout_state.transpose() +
                                   reads[i] * next.readout_memory.transpose();
      predicted.rowwise() += next.readout_bias.transpose();
      loss.add(data[i].targets, predicted);
    }
    const Scalar current = loss.value();
    if (current > prev_loss) {
      report.converged = true;
      break;
    }
    params = std::move(next);
    report.loss_history.push_back(current);
    if (prev_loss - current < static_cast<Scalar>(opt.tolerance)) {
      report.converged = true;
      break;
    }
    prev_loss = current;
  }
  report.final_params = std::move(params);
  return report;
}

enum class Dynamics { esn, esgru };

template <typename Scalar, typename Derived>
Sequence<Scalar> run_dynamics(const ReservoirWeights<Scalar>& weights,
                              const Eigen::MatrixBase<Derived>& X,
                              Dynamics dynamics) {
  return dynamics == Dynamics::esn ? esn_run(weights, X) : esgru_run(weights, X);
}

/// Linear readout y = bias + weights h of a fixed-weight baseline.
template <typename Scalar>
struct LinearReadout {
  Vector<Scalar> bias;     // L
  Matrix<Scalar> weights;  // L x m

  template <typename Derived>
  Sequence<Scalar> apply(const Eigen::MatrixBase<Derived>& H) const {
    Sequence<Scalar> Y = H * weights.transpose();
    Y.rowwise() += bias.transpose();
    return Y;
  }
};

/// Ridge readout for a fixed-weight baseline, pooled over every time step of
/// every sequence.
template <typename Scalar>
LinearReadout<Scalar> fit_readout(const ReservoirWeights<Scalar>& weights,
                                  std::span<const TaskSample<Scalar>> data,
                                  double lambda, Dynamics dynamics,
                                  bool intercept = true) {
  if (data.empty()) throw std::invalid_argument("fit_readout: empty dataset");
  const Index n = data.front().inputs.cols();
  const Index L = data.front().targets.cols();
  const Index m = weights.size();
  detail::check_dataset(data, n, L);
  require_dims(weights.input_dim() == n,
               "fit_readout: reservoir input dimension mismatch");
  const Index lead = intercept ? 1 : 0;
  NormalEquations<Scalar> eq(lead + m, L);
  for (const auto& s : data) {
    const Sequence<Scalar> H = run_dynamics(weights, s.inputs, dynamics);
    if (intercept) {
      Sequence<Scalar> F(H.rows(), m + 1);
      F << Vector<Scalar>::Ones(H.rows()), H;
      eq.add_rows(F, s.targets);
    } else {
      eq.add_rows(H, s.targets);
    }
  }
  const Matrix<Scalar> theta = eq.solve(static_cast<Scalar>(lambda), lead);
  LinearReadout<Scalar> out;
  out.bias = intercept ? Vector<Scalar>(theta.col(0)) : Vector<Scalar>::Zero(L);
  out.weights = theta.rightCols(m);
  return out;
}

}  // namespace rmm
