#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "rmm/pi_digits.hpp"
#include "rmm/reservoir.hpp"

using namespace rmm;

namespace {

// Rabinowitz-Wagon spigot; returns the first `count` decimals after "3.".
std::string spigot_pi_decimals(int count) {
  const int digits = count + 10;  // guard digits for held predigits
  const int len = digits * 10 / 3 + 1;
  std::vector<int> a(static_cast<std::size_t>(len), 2);
  std::string out;
  int nines = 0, predigit = 0;
  for (int j = 1; j <= digits; ++j) {
    int q = 0;
    for (int i = len; i > 0; --i) {
      const int x = 10 * a[static_cast<std::size_t>(i - 1)] + q * i;
      a[static_cast<std::size_t>(i - 1)] = x % (2 * i - 1);
      q = x / (2 * i - 1);
    }
    a[0] = q % 10;
    q /= 10;
    if (q == 9) {
      ++nines;
    } else if (q == 10) {
      out += char('0' + predigit + 1);
      out.append(static_cast<std::size_t>(nines), '0');
      predigit = 0;
      nines = 0;
    } else {
      if (j > 1) out += char('0' + predigit);
      predigit = q;
      out.append(static_cast<std::size_t>(nines), '9');
      nines = 0;
    }
  }
  out += char('0' + predigit);
  // out starts with the leading 3
  return out.substr(1, static_cast<std::size_t>(count));
}

CrjHyperparams small(Index m, Index l, Index n = 1) {
  CrjHyperparams hp;
  hp.input_weight = 0.5;
  hp.cycle_weight = 0.9;
  hp.jump_weight = 0.3;
  hp.jump_length = l;
  hp.reservoir_size = m;
  hp.input_dim = n;
  return hp;
}

Matrix<double> dense(const Eigen::SparseMatrix<double>& W) { return Matrix<double>(W); }

}  // namespace

TEST_CASE("pi signs of the first ten decimals") {
  const std::vector<int> expected{-1, -1, -1, +1, +1, -1, +1, +1, -1, +1};
  CHECK(pi_signs(10) == expected);
  CHECK(pi_signs(1) == std::vector<int>{-1});
  CHECK(pi_signs(50) == pi_signs(50));
}

TEST_CASE("digit table agrees with an independent spigot") {
  const int count = 1000;
  const std::string oracle = spigot_pi_decimals(count);
  const auto table = pi_digit_table();
  REQUIRE(table.size() >= 100000);
  CHECK(std::string(table.substr(0, count)) == oracle);
  const auto signs = pi_signs(count);
  for (int i = 0; i < count; ++i)
    CHECK(signs[static_cast<std::size_t>(i)] == (oracle[static_cast<std::size_t>(i)] <= '4' ? -1 : +1));
}

TEST_CASE("pi signs past the table are rejected") {
  CHECK_THROWS_AS(pi_signs(pi_digit_table().size() + 1), std::out_of_range);
}

TEST_CASE("crj with four neurons") {
  const auto w = build_crj<double>(small(4, 2), WarningSink{});
  const auto W = dense(w.recurrent);
  CHECK(w.recurrent.nonZeros() == 6);
  Matrix<double> expected = Matrix<double>::Zero(4, 4);
  for (int i = 0; i < 4; ++i) expected((i + 1) % 4, i) = 0.9;
  expected(0, 2) = expected(2, 0) = 0.3;
  CHECK(W == expected);
  Matrix<double> U(4, 1);
  U << -0.5, -0.5, -0.5, 0.5;
  CHECK(w.input == U);
}

TEST_CASE("zero cycle and jump weights give an empty recurrent matrix") {
  auto hp = small(10, 3);
  hp.cycle_weight = 0;
  hp.jump_weight = 0;
  const auto w = build_crj<double>(hp, WarningSink{});
  CHECK(dense(w.recurrent).isZero(0));
}

TEST_CASE("jump pairs stop at the last neuron") {
  const auto W = dense(build_crj<double>(small(6, 2), WarningSink{}).recurrent);
  // zero-based pairs (0,2) and (2,4); (4,6) would leave the reservoir
  CHECK(W(0, 2) == 0.3);
  CHECK(W(2, 0) == 0.3);
  CHECK(W(2, 4) == 0.3);
  CHECK(W(4, 2) == 0.3);
  CHECK(W(4, 0) == 0.0);
  CHECK(W(0, 4) == 0.0);
  CHECK(build_crj<double>(small(6, 2), WarningSink{}).recurrent.nonZeros() == 6 + 4);
}

TEST_CASE("input signs run row-major over the pi digits") {
  const auto w = build_crj<double>(small(5, 2, 3), WarningSink{});
  const auto signs = pi_signs(15);
  for (Index i = 0; i < 5; ++i)
    for (Index j = 0; j < 3; ++j)
      CHECK(w.input(i, j) == 0.5 * signs[static_cast<std::size_t>(i * 3 + j)]);
}

TEST_CASE("nonzero count of the recurrent matrix") {
  for (Index m = 4; m <= 40; ++m) {
    for (Index l = 2; l < m - 1; ++l) {
      const auto w = build_crj<double>(small(m, l), WarningSink{});
      CAPTURE(m);
      CAPTURE(l);
      CHECK(w.recurrent.nonZeros() == m + 2 * ((m - 1) / l));
    }
  }
}

TEST_CASE("crj construction is deterministic") {
  const auto a = build_crj<double>(small(50, 7, 2), WarningSink{});
  const auto b = build_crj<double>(small(50, 7, 2), WarningSink{});
  CHECK(a.input == b.input);
  CHECK(dense(a.recurrent) == dense(b.recurrent));
}

TEST_CASE("invalid hyperparameters are rejected") {
  CHECK_THROWS_AS(build_crj<double>(small(6, 1), WarningSink{}), std::invalid_argument);
  CHECK_THROWS_AS(build_crj<double>(small(6, 6), WarningSink{}), std::invalid_argument);
  CHECK_THROWS_AS(build_crj<double>(small(6, 7), WarningSink{}), std::invalid_argument);
  auto hp = small(8, 2);
  hp.cycle_weight = 1.0;
  CHECK_THROWS_AS(build_crj<double>(hp, WarningSink{}), std::invalid_argument);
  hp = small(8, 2);
  hp.input_weight = -1.0;
  CHECK_THROWS_AS(build_crj<double>(hp, WarningSink{}), std::invalid_argument);
}

TEST_CASE("spectral radius warning without rescaling") {
  auto hp = small(32, 2);
  hp.cycle_weight = 0.9;
  hp.jump_weight = 0.9;
  std::vector<std::string> warnings;
  const auto w = build_crj<double>(hp, [&](std::string_view s) { warnings.emplace_back(s); });
  CHECK(warnings.size() == 1);
  CHECK(dense(w.recurrent).maxCoeff() == doctest::Approx(0.9));

  warnings.clear();
  build_crj<double>(small(32, 8), [&](std::string_view s) { warnings.emplace_back(s); });
  CHECK(warnings.empty());
}

TEST_CASE("spectral radius estimate of a scaled cycle") {
  Eigen::SparseMatrix<double> W(7, 7);
  for (int i = 0; i < 7; ++i) W.insert((i + 1) % 7, i) = 0.6;
  CHECK(estimate_spectral_radius(W) == doctest::Approx(0.6).epsilon(1e-3));
}

TEST_CASE("esn scalar recurrence") {
  ReservoirWeights<double> w;
  w.input = Matrix<double>::Constant(1, 1, 1.0);
  w.recurrent.resize(1, 1);
  w.recurrent.insert(0, 0) = 0.5;
  Sequence<double> X(2, 1);
  X << 1, 1;
  const auto H = esn_run(w, X);
  CHECK(H(0, 0) == doctest::Approx(0.761594).epsilon(1e-6));
  CHECK(H(1, 0) == doctest::Approx(std::tanh(1 + 0.5 * std::tanh(1.0))));
  CHECK(H(1, 0) == doctest::Approx(0.881130).epsilon(1e-6));
}

TEST_CASE("esn zero input stays at rest") {
  const auto w = build_crj<double>(small(20, 3, 2), WarningSink{});
  const auto H = esn_run(w, Sequence<double>::Zero(30, 2));
  CHECK(H.isZero(0));
  CHECK(esn_run(w, Sequence<double>(0, 2)).rows() == 0);
}

TEST_CASE("esn rejects a wrong input width") {
  const auto w = build_crj<double>(small(20, 3, 2), WarningSink{});
  CHECK_THROWS_AS(esn_run(w, Sequence<double>::Zero(3, 3)), DimensionError);
  CHECK_THROWS_AS(esgru_run(w, Sequence<double>::Zero(3, 1)), DimensionError);
}

TEST_CASE("esgru scalar step") {
  ReservoirWeights<double> w;
  w.input = Matrix<double>::Constant(1, 1, 1.0);
  w.recurrent.resize(1, 1);
  Sequence<double> X = Sequence<double>::Zero(1, 1);
  CHECK(esgru_run(w, X)(0, 0) == 0.0);

  // hand evaluation with x = 1 and W = [0.5] over two steps
  w.recurrent.insert(0, 0) = 0.5;
  X = Sequence<double>::Ones(2, 1);
  const auto sig = [](double v) { return 1 / (1 + std::exp(-v)); };
  double h = 0;
  for (int t = 0; t < 2; ++t) {
    const double z = sig(1 + 0.5 * h);
    const double cand = std::tanh(1 + 0.5 * (z * h));
    h = (1 - z) * h + z * cand;
  }
  CHECK(esgru_run(w, X)(1, 0) == doctest::Approx(h).epsilon(1e-14));
}

TEST_CASE("activations stay inside the open unit interval") {
  const auto w = build_crj<double>(small(40, 4, 3), WarningSink{});
  std::mt19937_64 rng(3);
  std::normal_distribution<double> N(0, 3);
  Sequence<double> X(100, 3);
  for (Index i = 0; i < X.size(); ++i) X.data()[i] = N(rng);
  CHECK(esn_run(w, X).cwiseAbs().maxCoeff() < 1.0);
  CHECK(esgru_run(w, X).cwiseAbs().maxCoeff() < 1.0);
  CHECK(esgru_run(w, Sequence<double>::Zero(10, 3)).isZero(0));
}

TEST_CASE("trajectories from different initial states converge") {
  CrjHyperparams hp = small(128, 8);
  hp.cycle_weight = 0.5;
  hp.jump_weight = 0.5;
  const auto w = build_crj<double>(hp, WarningSink{});
  REQUIRE(estimate_spectral_radius(w.recurrent) < 1.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1, 1);
  Sequence<double> X(200, 1);
  for (Index t = 0; t < 200; ++t) X(t, 0) = U(rng);
  const auto a = esn_run(w, X);
  const auto b = esn_run(w, X, Vector<double>::Constant(128, 0.9));
  CHECK((a.row(199) - b.row(199)).norm() < 1e-6);
}
