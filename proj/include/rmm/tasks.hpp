#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmm/types.hpp"

namespace rmm {

/// Task-specific descriptors carried alongside a sample.
struct TaskMeta {
  std::string task;
  std::vector<Index> spikes;  // latch: zero-based spike steps
  Index payload_length = 0;   // copy / repeat copy
  Index repeats = 0;          // repeat copy
};

/// One input/target pair, one time step per row.
template <typename Scalar = double>
struct TaskSample {
  Sequence<Scalar> inputs;   // T x n
  Sequence<Scalar> targets;  // T x L
  TaskMeta meta;

  Index length() const { return inputs.rows(); }
};

using Sample = TaskSample<double>;

/// Derives an independent 64-bit seed for a named sub-stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(base),
                    static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  std::uint32_t words[2];
  seq.generate(std::begin(words), std::end(words));
  return (std::uint64_t{words[0]} << 32) | words[1];
}

// ---------------------------------------------------------------------------
// Latch

struct LatchOptions {
  Index min_len = 20;
  Index max_len = 200;
  Index n_spikes = 3;
};

/// Latch sample with spikes at the given zero-based steps. The output starts
/// at 0 and toggles at every spike, effective at the spike step itself.
template <typename Scalar = double>
TaskSample<Scalar> make_latch(Index length, std::vector<Index> spikes) {
  std::sort(spikes.begin(), spikes.end());
  TaskSample<Scalar> s;
  s.inputs = Sequence<Scalar>::Zero(length, 1);
  s.targets = Sequence<Scalar>::Zero(length, 1);
  for (Index p : spikes) {
    if (p < 0 || p >= length)
      throw std::invalid_argument("make_latch: spike outside the sequence");
    s.inputs(p, 0) = Scalar(1);
  }
  Scalar level = 0;
  std::size_t next = 0;
  for (Index t = 0; t < length; ++t) {
    while (next < spikes.size() && spikes[next] == t) {
      level = Scalar(1) - level;
      ++next;
    }
    s.targets(t, 0) = level;
  }
  s.meta.task = "latch";
  s.meta.spikes = std::move(spikes);
  return s;
}

template <typename Scalar = double>
TaskSample<Scalar> gen_latch(std::uint64_t seed, const LatchOptions& opt = {}) {
  if (opt.n_spikes < 0 || opt.max_len < 2 * opt.n_spikes ||
      opt.min_len > opt.max_len || opt.min_len < 1 ||
      opt.n_spikes > opt.max_len - 1) {
    throw std::invalid_argument("gen_latch: infeasible spike count or length range");
  }
  std::mt19937_64 rng(seed);
  const Index lo = std::max(opt.min_len, opt.n_spikes + 1);
  const Index T = std::uniform_int_distribution<Index>(lo, opt.max_len)(rng);
  // Step 0 never spikes so the first output is always 0.
  std::vector<Index> candidates(static_cast<std::size_t>(T - 1));
  for (Index i = 0; i < T - 1; ++i) candidates[static_cast<std::size_t>(i)] = i + 1;
  std::vector<Index> spikes;
  std::sample(candidates.begin(), candidates.end(), std::back_inserter(spikes),
              opt.n_spikes, rng);
  return make_latch<Scalar>(T, std::move(spikes));
}

// ---------------------------------------------------------------------------
// Copy and repeat copy

struct CopyOptions {
  Index max_payload = 20;
  Index bits = 8;
};

struct RepeatCopyOptions {
  Index max_payload = 20;
  Index bits = 8;
  Index max_repeats = 3;
};

/// Repeat copy sample for a P x bits payload: the payload, then an end token
/// on channel `bits` carrying repeats / max_repeats, then `repeats` copies
/// of the payload expected on the output while the input stays zero.
template <typename Scalar = double, typename Derived>
TaskSample<Scalar> make_repeat_copy(const Eigen::MatrixBase<Derived>& payload,
                                    Index repeats, Index max_repeats) {
  const Index P = payload.rows();
  const Index bits = payload.cols();
  if (P < 1 || repeats < 1 || max_repeats < repeats)
    throw std::invalid_argument("make_repeat_copy: invalid payload or repeat count");
  const Index T = P + 1 + repeats * P;
  TaskSample<Scalar> s;
  s.inputs = Sequence<Scalar>::Zero(T, bits + 1);
  s.targets = Sequence<Scalar>::Zero(T, bits);
  s.inputs.topLeftCorner(P, bits) = payload.template cast<Scalar>();
  s.inputs(P, bits) = Scalar(repeats) / Scalar(max_repeats);
  for (Index r = 0; r < repeats; ++r)
    s.targets.middleRows(P + 1 + r * P, P) = payload.template cast<Scalar>();
  s.meta.task = "repeat_copy";
  s.meta.payload_length = P;
  s.meta.repeats = repeats;
  return s;
}

/// Copy sample: the single-repeat case with a unit end token.
template <typename Scalar = double, typename Derived>
TaskSample<Scalar> make_copy(const Eigen::MatrixBase<Derived>& payload) {
  auto s = make_repeat_copy<Scalar>(payload, 1, 1);
  s.meta.task = "copy";
  s.meta.repeats = 0;
  return s;
}

namespace detail {
template <typename Scalar>
Matrix<Scalar> random_bits(std::mt19937_64& rng, Index rows, Index cols) {
  std::bernoulli_distribution coin(0.5);
  Matrix<Scalar> out(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) out(i, j) = coin(rng) ? Scalar(1) : Scalar(0);
  return out;
}
}  // namespace detail

template <typename Scalar = double>
TaskSample<Scalar> gen_copy(std::uint64_t seed, const CopyOptions& opt = {}) {
  if (opt.max_payload < 1 || opt.bits < 1)
    throw std::invalid_argument("gen_copy: max_payload and bits must be positive");
  std::mt19937_64 rng(seed);
  const Index P = std::uniform_int_distribution<Index>(1, opt.max_payload)(rng);
  return make_copy<Scalar>(detail::random_bits<Scalar>(rng, P, opt.bits));
}

template <typename Scalar = double>
TaskSample<Scalar> gen_repeat_copy(std::uint64_t seed,
                                   const RepeatCopyOptions& opt = {}) {
  if (opt.max_payload < 1 || opt.bits < 1 || opt.max_repeats < 1)
    throw std::invalid_argument(
        "gen_repeat_copy: max_payload, bits and max_repeats must be positive");
  std::mt19937_64 rng(seed);
  const Index P = std::uniform_int_distribution<Index>(1, opt.max_payload)(rng);
  const Index reps = std::uniform_int_distribution<Index>(1, opt.max_repeats)(rng);
  return make_repeat_copy<Scalar>(detail::random_bits<Scalar>(rng, P, opt.bits),
                                  reps, opt.max_repeats);
}

// ---------------------------------------------------------------------------
// Runtime benchmark: predict the previous random bit vector.

template <typename Scalar = double>
TaskSample<Scalar> gen_shift_benchmark(std::uint64_t seed, Index length,
                                       Index bits = 8) {
  if (length < 2 || bits < 1)
    throw std::invalid_argument("gen_shift_benchmark: need length >= 2 and bits >= 1");
  std::mt19937_64 rng(seed);
  TaskSample<Scalar> s;
  s.inputs = detail::random_bits<Scalar>(rng, length, bits);
  s.targets = Sequence<Scalar>::Zero(length, bits);
  s.targets.bottomRows(length - 1) = s.inputs.topRows(length - 1);
  s.meta.task = "shift";
  return s;
}

}  // namespace rmm
