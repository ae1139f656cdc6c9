#include <doctest.h>

#include <set>

#include "rmm/metrics.hpp"
#include "rmm/tasks.hpp"

using namespace rmm;

TEST_CASE("latch toggles at the spike step") {
  const auto s = make_latch(10, {1, 4, 7});
  Sequence<double> y(10, 1);
  y << 0, 1, 1, 1, 0, 0, 0, 1, 1, 1;
  CHECK(s.targets == y);
  CHECK(s.inputs.sum() == 3.0);
  CHECK(s.inputs(4, 0) == 1.0);
  CHECK(make_latch(10, {}).targets.isZero(0));
  CHECK_THROWS_AS(make_latch(5, {5}), std::invalid_argument);
}

TEST_CASE("generated latch samples") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto s = gen_latch(seed);
    CAPTURE(seed);
    CHECK(s.length() >= 20);
    CHECK(s.length() <= 200);
    CHECK(s.meta.spikes.size() == 3);
    CHECK(s.inputs(0, 0) == 0.0);
    CHECK(s.targets(0, 0) == 0.0);
    CHECK(std::set<Index>(s.meta.spikes.begin(), s.meta.spikes.end()).size() == 3);
    // output changes exactly at the spikes
    for (Index t = 1; t < s.length(); ++t)
      CHECK((s.targets(t, 0) != s.targets(t - 1, 0)) == (s.inputs(t, 0) == 1.0));
  }
  const auto a = gen_latch(7), b = gen_latch(7);
  CHECK(a.inputs == b.inputs);
  CHECK(a.targets == b.targets);
  CHECK_THROWS_AS(gen_latch(1, {20, 5, 3}), std::invalid_argument);
  CHECK_THROWS_AS(gen_latch(1, {1, 5, 3}), std::invalid_argument);
}

TEST_CASE("long latch sequences") {
  const auto s = gen_latch(3, {1700, 1700, 8});
  CHECK(s.length() == 1700);
  CHECK(s.inputs.sum() == 8.0);
}

TEST_CASE("copy with a two-step payload") {
  Matrix<double> payload = Matrix<double>::Zero(2, 8);
  payload(0, 0) = 1;
  payload(1, 1) = 1;
  const auto s = make_copy(payload);
  CHECK(s.length() == 5);
  CHECK(s.inputs.cols() == 9);
  CHECK(s.targets.cols() == 8);
  CHECK(s.targets.middleRows(3, 2) == payload);
  CHECK(s.targets.topRows(3).isZero(0));
  CHECK(s.inputs(2, 8) == 1.0);
  CHECK(s.inputs.bottomRows(2).isZero(0));
  CHECK(make_copy(Matrix<double>::Ones(1, 8)).length() == 3);
}

TEST_CASE("generated copy samples") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = gen_copy(seed);
    const Index P = s.meta.payload_length;
    CHECK(P >= 1);
    CHECK(P <= 20);
    CHECK(s.length() == 2 * P + 1);
    CHECK(s.length() <= 41);
    CHECK(s.inputs.cols() == 9);
    CHECK(s.targets.cols() == 8);
    CHECK(s.targets.bottomRows(P) == s.inputs.topLeftCorner(P, 8));
    CHECK(((s.inputs.array() == 0) || (s.inputs.array() == 1)).all());
  }
  CHECK(gen_copy(5).inputs == gen_copy(5).inputs);
  CHECK(gen_copy(5).inputs != gen_copy(6).inputs);
}

TEST_CASE("repeat copy layout") {
  Matrix<double> payload(2, 3);
  payload << 1, 0, 1, 0, 1, 1;
  const auto s = make_repeat_copy(payload, 2, 3);
  CHECK(s.length() == 7);
  CHECK(s.inputs(2, 3) == doctest::Approx(2.0 / 3.0));
  CHECK(s.targets.middleRows(3, 2) == payload);
  CHECK(s.targets.middleRows(5, 2) == payload);

  const auto once = make_repeat_copy(payload, 1, 3);
  const auto copy = make_copy(payload);
  CHECK(once.length() == copy.length());
  CHECK(once.targets == copy.targets);
  CHECK(once.inputs.leftCols(3) == copy.inputs.leftCols(3));
  CHECK(once.inputs(2, 3) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("generated repeat copy samples") {
  std::set<Index> repeats;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto s = gen_repeat_copy(seed, {8, 8, 3});
    const Index P = s.meta.payload_length, r = s.meta.repeats;
    repeats.insert(r);
    CHECK(s.length() == P + 1 + r * P);
    for (Index k = 0; k < r; ++k)
      CHECK(s.targets.middleRows(P + 1 + k * P, P) == s.inputs.topLeftCorner(P, 8));
  }
  CHECK(repeats == std::set<Index>{1, 2, 3});
  CHECK(gen_repeat_copy(9).targets == gen_repeat_copy(9).targets);
}

TEST_CASE("shift benchmark") {
  const auto s = gen_shift_benchmark(1, 3);
  CHECK(s.targets.row(0).isZero(0));
  CHECK(s.targets.row(1) == s.inputs.row(0));
  CHECK(s.targets.row(2) == s.inputs.row(1));
  CHECK(s.inputs.cols() == 8);
  CHECK(s.targets.cols() == 8);
  CHECK(gen_shift_benchmark(1, 2).targets.row(1) == gen_shift_benchmark(1, 2).inputs.row(0));
  CHECK_THROWS_AS(gen_shift_benchmark(1, 1), std::invalid_argument);
}

TEST_CASE("seed derivation separates streams") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  CHECK(seen.size() == 1000);
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}

TEST_CASE("rmse") {
  Matrix<double> Y(2, 3);
  Y << 1, 2, 3, 4, 5, 6;
  CHECK(rmse(Y, Y) == 0.0);
  CHECK(rmse(Y, (Y.array() + 1).matrix()) == doctest::Approx(1.0));
  Matrix<double> a = Matrix<double>::Zero(1, 2), b(1, 2);
  b << 3, 4;
  CHECK(rmse(a, b) == doctest::Approx(std::sqrt(12.5)));
  CHECK(rmse(a, b) == doctest::Approx(3.5355).epsilon(1e-4));
  CHECK_THROWS_AS(rmse(a, Y), DimensionError);
}

TEST_CASE("pooled rmse weights every entry equally") {
  Matrix<double> a = Matrix<double>::Zero(1, 1), b = Matrix<double>::Constant(1, 1, 2.0);
  Matrix<double> c = Matrix<double>::Zero(3, 1);
  PooledRmse<double> p;
  p.add(a, b);
  p.add(c, c);
  CHECK(p.value() == doctest::Approx(1.0));  // sqrt(4 / 4)
}
