#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "rmm/reservoir.hpp"
#include "rmm/types.hpp"

namespace rmm {

/// Read head movements, in tie-break priority order.
enum class ReadAction : int { stay = 0, increment = 1, reset = 2 };

inline const char* to_string(ReadAction a) {
  switch (a) {
    case ReadAction::stay: return "stay";
    case ReadAction::increment: return "increment";
    case ReadAction::reset: return "reset";
  }
  return "?";
}

/// Learnable parameters of a reservoir memory machine.
///
/// Dimensions: n inputs, m reservoir neurons, L outputs, K memory slots.
/// The write head fires when write_bias + write_input . x + write_state . h
/// is positive; the read head picks the argmax of read_bias + read_input x +
/// read_state h over {stay, increment, reset}; the output is
/// readout_bias + readout_state h + readout_memory r. Zero biases give the
/// plain bias-free machine.
template <typename Scalar>
struct RmmParams {
  Scalar write_bias = 0;
  Vector<Scalar> write_input;     // n
  Vector<Scalar> write_state;     // m
  Vector<Scalar> read_bias;       // 3
  Matrix<Scalar> read_input;      // 3 x n
  Matrix<Scalar> read_state;      // 3 x m
  Vector<Scalar> readout_bias;    // L
  Matrix<Scalar> readout_state;   // L x m
  Matrix<Scalar> readout_memory;  // L x n
  Index memory_size = 1;

  Index input_dim() const { return write_input.size(); }
  Index reservoir_size() const { return write_state.size(); }
  Index output_dim() const { return readout_state.rows(); }

  static RmmParams zeros(Index n, Index m, Index L, Index K) {
    RmmParams p;
    p.read_bias = Vector<Scalar>::Zero(3);
    p.readout_bias = Vector<Scalar>::Zero(L);
    p.write_input = Vector<Scalar>::Zero(n);
    p.write_state = Vector<Scalar>::Zero(m);
    p.read_input = Matrix<Scalar>::Zero(3, n);
    p.read_state = Matrix<Scalar>::Zero(3, m);
    p.readout_state = Matrix<Scalar>::Zero(L, m);
    p.readout_memory = Matrix<Scalar>::Zero(L, n);
    p.memory_size = K;
    return p;
  }

  void validate() const {
    const Index n = input_dim(), m = reservoir_size(), L = output_dim();
    require_dims(memory_size >= 1, "RmmParams: memory_size must be positive");
    require_dims(read_bias.size() == 3, "RmmParams: read_bias must have 3 entries");
    require_dims(readout_bias.size() == L,
                 "RmmParams: readout_bias must have L entries");
    require_dims(read_input.rows() == 3 && read_input.cols() == n,
                 "RmmParams: read_input must be 3 x n");
    require_dims(read_state.rows() == 3 && read_state.cols() == m,
                 "RmmParams: read_state must be 3 x m");
    require_dims(readout_state.cols() == m,
                 "RmmParams: readout_state must be L x m");
    require_dims(readout_memory.rows() == L && readout_memory.cols() == n,
                 "RmmParams: readout_memory must be L x n");
  }
};

/// Runtime state (h_t, M_t, k_t, l_t). Head positions are zero-based slot
/// indices in [0, K).
template <typename Scalar>
struct RmmState {
  Vector<Scalar> reservoir;  // m
  Matrix<Scalar> memory;     // K x n
  Index write_pos = 0;
  Index read_pos = 0;

  static RmmState initial(Index m, Index K, Index n) {
    return {Vector<Scalar>::Zero(m), Matrix<Scalar>::Zero(K, n), 0, 0};
  }
};

template <typename Scalar>
struct StepTrace {
  Scalar write_control = 0;
  Eigen::Matrix<Scalar, 3, 1> read_control = Eigen::Matrix<Scalar, 3, 1>::Zero();
  bool wrote = false;
  ReadAction read_action = ReadAction::stay;
  Vector<Scalar> read;    // n
  Vector<Scalar> output;  // L
};

/// argmax over (stay, increment, reset); ties go to the earlier entry.
template <typename Derived>
ReadAction select_read_action(const Eigen::MatrixBase<Derived>& control) {
  if (control(0) >= control(1) && control(0) >= control(2))
    return ReadAction::stay;
  if (control(1) >= control(2)) return ReadAction::increment;
  return ReadAction::reset;
}

inline Index apply_read_action(Index pos, ReadAction action, Index K) {
  switch (action) {
    case ReadAction::stay: return pos;
    case ReadAction::increment: return (pos + 1) % K;
    case ReadAction::reset: return 0;
  }
  return pos;
}

namespace detail {

// Advances `state` in place given the already-updated reservoir activations.
template <typename Scalar, typename XDerived>
StepTrace<Scalar> advance_memory(RmmState<Scalar>& state,
                                 const Eigen::MatrixBase<XDerived>& x,
                                 const RmmParams<Scalar>& params) {
  const Index K = params.memory_size;
  StepTrace<Scalar> trace;

  trace.write_control = params.write_bias + params.write_input.dot(x) +
                        params.write_state.dot(state.reservoir);
  if (trace.write_control > Scalar(0)) {
    state.memory.row(state.write_pos) = x.transpose();
    state.write_pos = (state.write_pos + 1) % K;
    trace.wrote = true;
  }

  trace.read_control = params.read_bias + params.read_input * x +
                       params.read_state * state.reservoir;
  trace.read_action = select_read_action(trace.read_control);
  state.read_pos = apply_read_action(state.read_pos, trace.read_action, K);

  trace.read = state.memory.row(state.read_pos).transpose();
  trace.output = params.readout_bias + params.readout_state * state.reservoir +
                 params.readout_memory * trace.read;
  return trace;
}

template <typename Scalar>
void check_step_dims(const RmmState<Scalar>& state, Index x_size,
                     Index h_size, const RmmParams<Scalar>& params) {
  params.validate();
  require_dims(x_size == params.input_dim(),
               "rmm: input has dimension " + std::to_string(x_size) +
                   ", expected " + std::to_string(params.input_dim()));
  require_dims(h_size == params.reservoir_size(),
               "rmm: reservoir state has dimension " + std::to_string(h_size) +
                   ", expected " + std::to_string(params.reservoir_size()));
  require_dims(state.memory.rows() == params.memory_size &&
                   state.memory.cols() == params.input_dim(),
               "rmm: memory must be K x n");
  require_dims(state.write_pos >= 0 && state.write_pos < params.memory_size &&
                   state.read_pos >= 0 && state.read_pos < params.memory_size,
               "rmm: head position outside [0, K)");
}

}  // namespace detail

/// One transition of the machine. `h_new` is the reservoir activation that
/// has already been advanced for this step.
template <typename Scalar, typename XDerived, typename HDerived>
std::pair<RmmState<Scalar>, StepTrace<Scalar>> rmm_step(
    const RmmState<Scalar>& state, const Eigen::MatrixBase<XDerived>& x,
    const Eigen::MatrixBase<HDerived>& h_new, const RmmParams<Scalar>& params) {
  detail::check_step_dims(state, x.size(), h_new.size(), params);
  RmmState<Scalar> next = state;
  next.reservoir = h_new;
  Vector<Scalar> xv = x;
  auto trace = detail::advance_memory(next, xv, params);
  return {std::move(next), std::move(trace)};
}

enum class RolloutDetail { outputs_only, full };

template <typename Scalar>
struct RmmRollout {
  Sequence<Scalar> outputs;                 // T x L
  Sequence<Scalar> reads;                   // T x n memory reads r_t
  std::vector<StepTrace<Scalar>> traces;    // empty unless detail == full
  std::vector<RmmState<Scalar>> states;     // states[t] is the state after step t
};

/// Runs the machine over X given the reservoir trajectory H (T x m) that
/// esn_run produced for the same input.
template <typename Scalar, typename XDerived, typename HDerived>
RmmRollout<Scalar> rmm_run_on_states(const RmmParams<Scalar>& params,
                                     const Eigen::MatrixBase<XDerived>& X,
                                     const Eigen::MatrixBase<HDerived>& H,
                                     RolloutDetail detail = RolloutDetail::full) {
  params.validate();
  const Index T = X.rows();
  require_dims(H.rows() == T, "rmm_run: reservoir trajectory length mismatch");
  require_dims(T == 0 || X.cols() == params.input_dim(),
               "rmm_run: input dimension mismatch");
  require_dims(T == 0 || H.cols() == params.reservoir_size(),
               "rmm_run: reservoir dimension mismatch");

  auto state = RmmState<Scalar>::initial(params.reservoir_size(),
                                         params.memory_size,
                                         params.input_dim());
  RmmRollout<Scalar> out;
  out.outputs.resize(T, params.output_dim());
  out.reads.resize(T, params.input_dim());
  if (detail == RolloutDetail::full) {
    out.traces.reserve(static_cast<std::size_t>(T));
    out.states.reserve(static_cast<std::size_t>(T));
  }
  Vector<Scalar> x(params.input_dim());
  for (Index t = 0; t < T; ++t) {
    x = X.row(t).transpose();
    state.reservoir = H.row(t).transpose();
    auto trace = detail::advance_memory(state, x, params);
    out.outputs.row(t) = trace.output.transpose();
    out.reads.row(t) = trace.read.transpose();
    if (detail == RolloutDetail::full) {
      out.traces.push_back(std::move(trace));
      out.states.push_back(state);
    }
  }
  return out;
}

/// Full forward pass from h = 0, M = 0, k = l = 0.
template <typename Scalar, typename XDerived>
RmmRollout<Scalar> rmm_run(const ReservoirWeights<Scalar>& weights,
                           const RmmParams<Scalar>& params,
                           const Eigen::MatrixBase<XDerived>& X,
                           RolloutDetail detail = RolloutDetail::full) {
  require_dims(weights.size() == params.reservoir_size(),
               "rmm_run: reservoir size does not match parameters");
  const Sequence<Scalar> H = esn_run(weights, X);
  return rmm_run_on_states(params, X, H, detail);
}

}  // namespace rmm
