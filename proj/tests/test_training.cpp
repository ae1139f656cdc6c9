#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "rmm/alignment.hpp"
#include "rmm/metrics.hpp"
#include "rmm/ridge.hpp"
#include "rmm/tasks.hpp"
#include "rmm/training.hpp"

using namespace rmm;

namespace {

Matrix<double> gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> N(0, 1);
  Matrix<double> M(rows, cols);
  for (Index i = 0; i < M.size(); ++i) M.data()[i] = N(rng);
  return M;
}

double ridge_loss(const Matrix<double>& theta, const Matrix<double>& F,
                  const Matrix<double>& Y, double lambda) {
  return (theta * F - Y).squaredNorm() + lambda * theta.squaredNorm();
}

// Minimum over every action sequence of the summed read costs, starting
// from slot 0.
double brute_force_alignment(const Matrix<double>& cost) {
  const Index K = cost.rows(), T = cost.cols();
  Index combos = 1;
  for (Index t = 0; t < T; ++t) combos *= 3;
  double best = std::numeric_limits<double>::infinity();
  for (Index code = 0; code < combos; ++code) {
    Index c = code, pos = 0;
    double total = 0;
    for (Index t = 0; t < T; ++t) {
      pos = apply_read_action(pos, static_cast<ReadAction>(c % 3), K);
      c /= 3;
      total += cost(pos, t);
    }
    best = std::min(best, total);
  }
  return best;
}

// Earliest tau <= t with minimal distance, found by sorting candidates.
std::vector<Index> brute_force_sources(const Matrix<double>& X, const Matrix<double>& Y,
                                       const Matrix<double>& R) {
  std::vector<Index> out;
  for (Index t = 0; t < Y.rows(); ++t) {
    std::vector<std::pair<double, Index>> cand;
    for (Index tau = 0; tau <= t; ++tau)
      cand.emplace_back((R * X.row(tau).transpose() - Y.row(t).transpose()).norm(), tau);
    out.push_back(std::min_element(cand.begin(), cand.end())->second);
  }
  return out;
}

ReservoirWeights<double> crj(Index m, Index n, double u, double wc, double wj, Index l) {
  CrjHyperparams hp;
  hp.reservoir_size = m;
  hp.input_dim = n;
  hp.input_weight = u;
  hp.cycle_weight = wc;
  hp.jump_weight = wj;
  hp.jump_length = l;
  return build_crj<double>(hp, WarningSink{});
}

}  // namespace

// ---------------------------------------------------------------------------
// ridge

TEST_CASE("ridge on an identity design") {
  const Matrix<double> F = Matrix<double>::Identity(2, 2);
  Matrix<double> Y(1, 2);
  Y << 2, 3;
  const auto theta = ridge_fit(F, Y, 0.0);
  CHECK(theta(0, 0) == doctest::Approx(2.0));
  CHECK(theta(0, 1) == doctest::Approx(3.0));
}

TEST_CASE("ridge shrinks a scalar fit") {
  const Matrix<double> F = Matrix<double>::Ones(1, 1);
  const Matrix<double> Y = Matrix<double>::Ones(1, 1);
  CHECK(ridge_fit(F, Y, 1.0)(0, 0) == doctest::Approx(0.5));
}

TEST_CASE("ridge normal equations hold") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    const Index d = 1 + rep % 7, N = 3 + rep, L = 1 + rep % 3;
    const auto F = gaussian(rng, d, N);
    const auto Y = gaussian(rng, L, N);
    const double lambda = rep % 2 ? 1e-3 : 0.5;
    const auto theta = ridge_fit(F, Y, lambda);
    const Matrix<double> A =
        F * F.transpose() + lambda * Matrix<double>::Identity(d, d);
    const Matrix<double> YF = Y * F.transpose();
    CHECK((theta * A - YF).cwiseAbs().maxCoeff() <= 1e-8 * YF.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("ridge solution is a local minimum") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    const auto F = gaussian(rng, 4, 12);
    const auto Y = gaussian(rng, 2, 12);
    const double lambda = 0.1 * (rep + 1);
    const auto theta = ridge_fit(F, Y, lambda);
    const double base = ridge_loss(theta, F, Y, lambda);
    for (int k = 0; k < 20; ++k) {
      Matrix<double> dir = gaussian(rng, 2, 4);
      dir *= 1e-3 / dir.norm();
      CHECK(ridge_loss(theta + dir, F, Y, lambda) >= base - 1e-12 * base);
    }
  }
}

TEST_CASE("singular system without regularization") {
  Matrix<double> F(2, 3);
  F << 1, 2, 3, 2, 4, 6;  // rank one
  const Matrix<double> Y = Matrix<double>::Ones(1, 3);
  CHECK_THROWS_AS(ridge_fit(F, Y, 0.0), SingularSystemError);
  CHECK_NOTHROW(ridge_fit(F, Y, 1e-3));
  CHECK_THROWS_AS(ridge_fit(F, Y, -1.0), std::invalid_argument);
}

TEST_CASE("streamed normal equations match a single batch") {
  std::mt19937_64 rng(2);
  const auto F = gaussian(rng, 5, 40);
  const auto Y = gaussian(rng, 2, 40);
  NormalEquations<double> eq(5, 2);
  eq.add_rows(F.leftCols(15).transpose(), Y.leftCols(15).transpose());
  eq.add_rows(F.rightCols(25).transpose(), Y.rightCols(25).transpose());
  CHECK(eq.samples() == 40);
  CHECK((eq.solve(0.01) - ridge_fit(F, Y, 0.01)).norm() < 1e-12);
}

TEST_CASE("unpenalized intercept column") {
  // y = 10 for every sample; a heavily penalized slope cannot absorb the
  // offset but a free intercept can.
  Matrix<double> F(2, 4);
  F << 1, 1, 1, 1, 0.1, -0.2, 0.3, -0.1;
  const Matrix<double> Y = Matrix<double>::Constant(1, 4, 10.0);
  NormalEquations<double> eq(2, 1);
  eq.add_rows(F.transpose(), Y.transpose());
  const auto theta = eq.solve(1e6, 1);
  CHECK(theta(0, 0) == doctest::Approx(10.0).epsilon(1e-4));
}

// ---------------------------------------------------------------------------
// alignment

TEST_CASE("alignment of a two-slot, two-step table") {
  Matrix<double> cost(2, 2);
  cost << 0, 3, 5, 1;
  const auto a = align_costs(cost);
  CHECK(a.table(0, 1) == 3.0);
  CHECK(a.table(1, 1) == 1.0);
  CHECK(a.table(0, 0) == 1.0);
  CHECK(a.table(1, 0) == 6.0);
  CHECK(a.table.col(2).isZero(0));
  CHECK(a.optimal_cost == 1.0);
  CHECK(a.actions == std::vector<ReadAction>{ReadAction::stay, ReadAction::increment});
  CHECK(a.positions == std::vector<Index>{0, 1});
}

TEST_CASE("alignment prefers staying on a zero-cost first slot") {
  const Index K = 3, T = 5, n = 2;
  Matrix<double> row(1, n);
  row << 0.5, -1;
  std::vector<Matrix<double>> memory(T, Matrix<double>::Zero(K, n));
  for (auto& M : memory) M.row(0) = row;
  const Matrix<double> Y = row.replicate(T, 1);
  const auto a = align_memory(memory, Y, Matrix<double>::Identity(n, n));
  CHECK(a.optimal_cost == 0.0);
  for (auto act : a.actions) CHECK(act == ReadAction::stay);
}

TEST_CASE("alignment matches exhaustive search") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> U(0, 1);
  for (int rep = 0; rep < 60; ++rep) {
    const Index K = 2 + rep % 2, T = 1 + rep % 6;
    Matrix<double> cost(K, T);
    for (Index i = 0; i < cost.size(); ++i) cost.data()[i] = U(rng);
    const auto a = align_costs(cost);
    CHECK(a.optimal_cost == doctest::Approx(brute_force_alignment(cost)).epsilon(1e-12));

    // replaying the actions gives the positions and the optimal cost
    Index pos = 0;
    double total = 0;
    for (Index t = 0; t < T; ++t) {
      pos = apply_read_action(pos, a.actions[static_cast<std::size_t>(t)], K);
      CHECK(pos == a.positions[static_cast<std::size_t>(t)]);
      total += cost(pos, t);
    }
    CHECK(std::abs(total - a.optimal_cost) <= 1e-9);
  }
}

TEST_CASE("alignment needs two slots") {
  CHECK_THROWS_AS(align_costs(Matrix<double>::Zero(1, 3)), std::invalid_argument);
  std::vector<Matrix<double>> memory(2, Matrix<double>::Zero(1, 1));
  CHECK_THROWS_AS(align_memory(memory, Matrix<double>::Zero(2, 1),
                               Matrix<double>::Identity(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("memory read costs use the euclidean norm") {
  std::vector<Matrix<double>> memory(1, Matrix<double>::Zero(2, 2));
  memory[0] << 3, 0, 0, 0;
  Matrix<double> Y(1, 2);
  Y << 0, 4;
  const auto c = memory_read_costs(memory, Y, Matrix<double>::Identity(2, 2));
  CHECK(c(0, 0) == doctest::Approx(5.0));
  CHECK(c(1, 0) == doctest::Approx(4.0));
}

// ---------------------------------------------------------------------------
// write targets

TEST_CASE("write targets of a two-step copy") {
  Matrix<double> X(4, 2), Y(4, 2);
  X << 1, 0, 0, 1, 0, 0, 0, 0;
  Y << 0, 0, 0, 0, 1, 0, 0, 1;
  const auto w = derive_write_targets(X, Y, Matrix<double>::Identity(2, 2));
  // t = 0 can only use x_0; t = 1 ties between x_0 and x_1 and keeps x_0
  CHECK(w.sources == std::vector<Index>{0, 0, 0, 1});
  CHECK(w.tau == std::vector<Index>{0, 1});
  CHECK(w.control == std::vector<int>{+1, +1, -1, -1});
  CHECK(w.sources == brute_force_sources(X, Y, Matrix<double>::Identity(2, 2)));
}

TEST_CASE("repeated inputs map to their first occurrence") {
  Matrix<double> X(5, 1);
  X << 1, 2, 1, 3, 2;
  const auto w = derive_write_targets(X, X, Matrix<double>::Identity(1, 1));
  CHECK(w.sources == std::vector<Index>{0, 1, 0, 3, 1});
  CHECK(w.tau == std::vector<Index>{0, 1, 3});
}

TEST_CASE("zero outputs write the input nearest to zero once") {
  Matrix<double> X(4, 2);
  X << 0.1, 0, 1, 1, 0.5, 0.5, 2, 0;
  const auto w = derive_write_targets(X, Matrix<double>::Zero(4, 2),
                                      Matrix<double>::Identity(2, 2));
  CHECK(w.tau == std::vector<Index>{0});
}

TEST_CASE("write targets match brute force and stay causal") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int rep = 0; rep < 40; ++rep) {
    const Index T = 3 + rep % 9, n = 2 + rep % 3, L = 1 + rep % 2;
    Matrix<double> X(T, n), Y(T, L);
    for (Index i = 0; i < X.size(); ++i) X.data()[i] = bit(rng);
    for (Index i = 0; i < Y.size(); ++i) Y.data()[i] = bit(rng);
    const auto R = gaussian(rng, L, n);
    const auto w = derive_write_targets(X, Y, R);
    CHECK(w.sources == brute_force_sources(X, Y, R));
    for (Index t = 0; t < T; ++t) {
      CHECK(w.sources[static_cast<std::size_t>(t)] <= t);
      const bool in_tau =
          std::find(w.tau.begin(), w.tau.end(), t) != w.tau.end();
      CHECK((w.control[static_cast<std::size_t>(t)] == +1) == in_tau);
    }
    CHECK(std::is_sorted(w.tau.begin(), w.tau.end()));
    CHECK(std::adjacent_find(w.tau.begin(), w.tau.end()) == w.tau.end());
  }
}

// ---------------------------------------------------------------------------
// fitting

TEST_CASE("fit on all-zero targets converges at once") {
  std::vector<Sample> data;
  for (int i = 0; i < 5; ++i) {
    auto s = gen_copy(derive_seed(4, i), {5, 3});
    s.targets.setZero();
    data.push_back(std::move(s));
  }
  const auto w = crj(20, 4, 0.5, 0.5, 0.3, 3);
  RmmTrainOptions opt;
  opt.memory_size = 4;
  const auto rep = fit_rmm<double>(w, data, opt);
  CHECK(rep.iterations <= 2);
  CHECK(rep.converged);
  CHECK(rep.loss_history.back() < 1e-10);
  CHECK(rep.final_params.readout_state.cwiseAbs().maxCoeff() < 1e-8);
  CHECK(rep.final_params.readout_memory.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("accepted losses never increase") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::vector<Sample> data;
    for (int i = 0; i < 12; ++i) data.push_back(gen_repeat_copy(derive_seed(seed, i), {4, 3, 2}));
    const auto w = crj(32, 4, 0.4, 0.6, 0.4, 5);
    RmmTrainOptions opt;
    opt.memory_size = 4;
    opt.lambda = 1e-4;
    const auto rep = fit_rmm<double>(w, data, opt);
    REQUIRE_FALSE(rep.loss_history.empty());
    for (std::size_t i = 1; i < rep.loss_history.size(); ++i)
      CHECK(rep.loss_history[i] <= rep.loss_history[i - 1]);
    CHECK(rep.iterations <= opt.max_iters);
  }
}

TEST_CASE("reported loss is the rollout error of the final parameters") {
  std::vector<Sample> data;
  for (int i = 0; i < 10; ++i) data.push_back(gen_copy(derive_seed(8, i), {5, 4}));
  const auto w = crj(40, 5, 0.3, 0.5, 0.5, 4);
  RmmTrainOptions opt;
  opt.memory_size = 8;
  const auto rep = fit_rmm<double>(w, data, opt);
  PooledRmse<double> err;
  for (const auto& s : data)
    err.add(s.targets, rmm_run(w, rep.final_params, s.inputs).outputs);
  CHECK(err.value() == doctest::Approx(rep.loss_history.back()).epsilon(1e-9));
}

TEST_CASE("fit rejects bad input") {
  const auto w = crj(10, 1, 0.5, 0.5, 0.5, 2);
  RmmTrainOptions opt;
  CHECK_THROWS_AS(fit_rmm<double>(w, std::span<const Sample>{}, opt), std::invalid_argument);
  std::vector<Sample> data{gen_copy(1, {3, 2})};  // three input channels
  CHECK_THROWS_AS(fit_rmm<double>(w, data, opt), DimensionError);
  data = {gen_latch(1)};
  opt.memory_size = 1;
  CHECK_THROWS_AS(fit_rmm<double>(w, data, opt), std::invalid_argument);
}

TEST_CASE("latch training reaches a near-exact fit") {
  std::vector<Sample> data;
  for (int i = 0; i < 190; ++i) data.push_back(gen_latch(derive_seed(2024, i)));
  const auto w = crj(128, 1, 0.45, 0.32, 0.73, 8);
  RmmTrainOptions opt;
  opt.memory_size = 2;
  opt.lambda = 1e-8;
  const auto rep = fit_rmm<double>(w, data, opt);
  CHECK(rep.loss_history.back() < 1e-3);
}

TEST_CASE("readout recovers a realizable map") {
  const auto w = crj(12, 2, 0.5, 0.7, 0.4, 3);
  std::mt19937_64 rng(10);
  const auto C = gaussian(rng, 3, 12);
  std::vector<Sample> data;
  for (int i = 0; i < 4; ++i) {
    Sample s;
    s.inputs = gaussian(rng, 30, 2);
    s.targets = esn_run(w, s.inputs) * C.transpose();
    data.push_back(std::move(s));
  }
  const auto fit = fit_readout<double>(w, data, 0.0, Dynamics::esn, false);
  CHECK((fit.weights - C).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(fit.bias.isZero(0));

  const auto with_bias = fit_readout<double>(w, data, 0.0, Dynamics::esn, true);
  CHECK((with_bias.weights - C).cwiseAbs().maxCoeff() < 1e-8);
  CHECK(with_bias.bias.cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("esgru readout recovers a realizable map") {
  const auto w = crj(10, 1, 0.6, 0.5, 0.5, 2);
  std::mt19937_64 rng(12);
  const auto C = gaussian(rng, 1, 10);
  std::vector<Sample> data;
  Sample s;
  s.inputs = gaussian(rng, 60, 1);
  s.targets = esgru_run(w, s.inputs) * C.transpose();
  data.push_back(s);
  const auto fit = fit_readout<double>(w, data, 0.0, Dynamics::esgru, false);
  CHECK((fit.weights - C).cwiseAbs().maxCoeff() < 1e-8);
}
