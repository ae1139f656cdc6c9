#pragma once

#include <Eigen/SparseCore>
#include <cmath>
#include <functional>
#include <iostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "rmm/pi_digits.hpp"
#include "rmm/types.hpp"

namespace rmm {

/// Hyperparameters of a cycle reservoir with jumps.
struct CrjHyperparams {
  double input_weight = 0.5;  // |U_ij|, in (-1, 1)
  double cycle_weight = 0.9;  // in [0, 1)
  double jump_weight = 0.3;   // in [0, 1)
  Index jump_length = 2;      // 1 < l < m - 1
  Index reservoir_size = 128;
  Index input_dim = 1;

  /// Throws std::invalid_argument on any violated range.
  void validate() const;
};

inline void CrjHyperparams::validate() const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("CrjHyperparams: " + msg);
  };
  if (reservoir_size < 1) fail("reservoir_size must be positive");
  if (input_dim < 1) fail("input_dim must be positive");
  if (!(input_weight > -1.0 && input_weight < 1.0))
    fail("input_weight must lie in (-1, 1)");
  if (!(cycle_weight >= 0.0 && cycle_weight < 1.0))
    fail("cycle_weight must lie in [0, 1)");
  if (!(jump_weight >= 0.0 && jump_weight < 1.0))
    fail("jump_weight must lie in [0, 1)");
  // l = m - 1 would place the first jump on top of the closing cycle edge.
  if (jump_length <= 1 || jump_length >= reservoir_size - 1)
    fail("jump_length must satisfy 1 < l < m - 1 (got l = " +
         std::to_string(jump_length) +
         ", m = " + std::to_string(reservoir_size) + ")");
}

template <typename Scalar>
struct ReservoirWeights {
  Matrix<Scalar> input;                   // m x n
  Eigen::SparseMatrix<Scalar> recurrent;  // m x m

  Index size() const { return input.rows(); }
  Index input_dim() const { return input.cols(); }
};

using WarningSink = std::function<void(std::string_view)>;

inline void warn_to_stderr(std::string_view msg) {
  std::cerr << "warning: " << msg << '\n';
}

/// Estimates the spectral radius of W from the growth rate of ||W^k v||
/// over `steps` power iterations. Works for the rotational spectra of
/// cycle matrices where plain power iteration does not settle.
template <typename Scalar>
Scalar estimate_spectral_radius(const Eigen::SparseMatrix<Scalar>& W,
                                int steps = 100) {
  const Index m = W.rows();
  if (m == 0 || steps <= 0) return Scalar(0);
  Vector<Scalar> v = Vector<Scalar>::Ones(m) / std::sqrt(Scalar(m));
  Scalar log_growth = 0;
  for (int k = 0; k < steps; ++k) {
    Vector<Scalar> next = W * v;
    const Scalar norm = next.norm();
    if (norm == Scalar(0)) return Scalar(0);
    log_growth += std::log(norm);
    v = next / norm;
  }
  return std::exp(log_growth / Scalar(steps));
}

/// Deterministic cycle reservoir with jumps.
///
/// Input weights are +-u with signs read row-major from the digits of pi.
/// Neuron i+1 receives from neuron i with weight w_c (indices mod m), and
/// neurons i, i+l are linked in both directions with weight w_j for
/// i = 0, l, 2l, ... while i + l < m.
template <typename Scalar = double>
ReservoirWeights<Scalar> build_crj(const CrjHyperparams& hp,
                                   const WarningSink& warn = warn_to_stderr) {
  hp.validate();
  const Index m = hp.reservoir_size;
  const Index n = hp.input_dim;

  ReservoirWeights<Scalar> out;
  out.input.resize(m, n);
  const auto signs = pi_signs(static_cast<std::size_t>(m * n));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j)
      out.input(i, j) =
          Scalar(signs[static_cast<std::size_t>(i * n + j)]) *
          Scalar(hp.input_weight);

  std::vector<Eigen::Triplet<Scalar>> entries;
  if (hp.cycle_weight != 0.0) {
    for (Index i = 0; i < m; ++i)
      entries.emplace_back((i + 1) % m, i, Scalar(hp.cycle_weight));
  }
  if (hp.jump_weight != 0.0) {
    for (Index i = 0; i + hp.jump_length < m; i += hp.jump_length) {
      entries.emplace_back(i, i + hp.jump_length, Scalar(hp.jump_weight));
      entries.emplace_back(i + hp.jump_length, i, Scalar(hp.jump_weight));
    }
  }
  out.recurrent.resize(m, m);
  out.recurrent.setFromTriplets(entries.begin(), entries.end());
  out.recurrent.makeCompressed();

  if (warn) {
    const Scalar rho = estimate_spectral_radius(out.recurrent);
    if (rho >= Scalar(1)) {
      warn("reservoir spectral radius estimate " + std::to_string(double(rho)) +
           " >= 1; the echo state property may not hold");
    }
  }
  return out;
}

/// h_t = tanh(U x_t + W h_{t-1}) from h_0 = `initial`. Returns T x m states.
template <typename Scalar, typename Derived>
Sequence<Scalar> esn_run(const ReservoirWeights<Scalar>& weights,
                         const Eigen::MatrixBase<Derived>& X,
                         const std::type_identity_t<Vector<Scalar>>& initial) {
  const Index m = weights.size();
  require_dims(X.cols() == weights.input_dim() || X.rows() == 0,
               "esn_run: input dimension " + std::to_string(X.cols()) +
                   " does not match reservoir input dimension " +
                   std::to_string(weights.input_dim()));
  require_dims(initial.size() == m, "esn_run: initial state has wrong size");

  Sequence<Scalar> H(X.rows(), m);
  Vector<Scalar> h = initial;
  for (Index t = 0; t < X.rows(); ++t) {
    h = (weights.input * X.row(t).transpose() + weights.recurrent * h)
            .array()
            .tanh()
            .matrix();
    H.row(t) = h.transpose();
  }
  return H;
}

template <typename Scalar, typename Derived>
Sequence<Scalar> esn_run(const ReservoirWeights<Scalar>& weights,
                         const Eigen::MatrixBase<Derived>& X) {
  return esn_run(weights, X, Vector<Scalar>::Zero(weights.size()).eval());
}

namespace detail {
template <typename Scalar>
Scalar sigmoid(Scalar v) {
  return Scalar(1) / (Scalar(1) + std::exp(-v));
}
}  // namespace detail

/// Gated recurrent unit dynamics with every pre-activation reusing the one
/// CRJ pair (U, W) and no biases:
///   z_t = r_t = sigmoid(U x_t + W h_{t-1})
///   h_t = (1 - z_t) * h_{t-1} + z_t * tanh(U x_t + W (r_t * h_{t-1}))
template <typename Scalar, typename Derived>
Sequence<Scalar> esgru_run(const ReservoirWeights<Scalar>& weights,
                           const Eigen::MatrixBase<Derived>& X,
                           const std::type_identity_t<Vector<Scalar>>& initial) {
  const Index m = weights.size();
  require_dims(X.cols() == weights.input_dim() || X.rows() == 0,
               "esgru_run: input dimension " + std::to_string(X.cols()) +
                   " does not match reservoir input dimension " +
                   std::to_string(weights.input_dim()));
  require_dims(initial.size() == m, "esgru_run: initial state has wrong size");

  Sequence<Scalar> H(X.rows(), m);
  Vector<Scalar> h = initial;
  Vector<Scalar> drive(m), gate(m), candidate(m);
  for (Index t = 0; t < X.rows(); ++t) {
    drive = weights.input * X.row(t).transpose();
    gate = (drive + weights.recurrent * h).unaryExpr(&detail::sigmoid<Scalar>);
    candidate = (drive + weights.recurrent * gate.cwiseProduct(h))
                    .array()
                    .tanh()
                    .matrix();
    h = (Vector<Scalar>::Ones(m) - gate).cwiseProduct(h) +
        gate.cwiseProduct(candidate);
    H.row(t) = h.transpose();
  }
  return H;
}

template <typename Scalar, typename Derived>
Sequence<Scalar> esgru_run(const ReservoirWeights<Scalar>& weights,
                           const Eigen::MatrixBase<Derived>& X) {
  return esgru_run(weights, X, Vector<Scalar>::Zero(weights.size()).eval());
}

}  // namespace rmm
