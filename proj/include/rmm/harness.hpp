#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmm/machine.hpp"
#include "rmm/reservoir.hpp"
#include "rmm/tasks.hpp"
#include "rmm/training.hpp"

namespace rmm {

enum class ModelKind { esn, esgru, rmm };

std::string_view to_string(ModelKind kind);
/// Throws std::invalid_argument naming the valid models.
ModelKind parse_model_kind(std::string_view name);

/// One point of the random search.
struct HyperPoint {
  double input_weight = 0.5;
  double cycle_weight = 0.9;
  double jump_weight = 0.3;
  Index jump_length = 8;
  double lambda = 1e-4;
  Index memory_size = 16;  // ignored by the baselines
};

/// Bounds of the random hyperparameter search. Jump lengths never exceed
/// floor(m / 2); `jump_length_max = 0` means exactly that bound.
struct HyperSpace {
  double input_weight_min = 0.05, input_weight_max = 0.95;
  double cycle_weight_min = 0.0, cycle_weight_max = 0.99;
  double jump_weight_min = 0.0, jump_weight_max = 0.99;
  Index jump_length_min = 2, jump_length_max = 0;
  double log10_lambda_min = -8.0, log10_lambda_max = 0.0;
  std::vector<Index> memory_sizes{8, 16, 32};

  /// Throws std::invalid_argument if some draw could violate the reservoir
  /// constraints for a reservoir of `reservoir_size` neurons.
  void validate(Index reservoir_size) const;
  Index max_jump_length(Index reservoir_size) const;
  HyperPoint sample(std::mt19937_64& rng, Index reservoir_size) const;
};

/// Per-task defaults. Latch searches K = 2 only: the solution stores a single
/// 1 and toggles between it and an empty slot. Its reservoir range is also
/// narrowed towards strong, short jumps, which keep the state active after the
/// first spike. For copy tasks, memory sizes shorter than `max_payload` are
/// dropped.
HyperSpace default_hyper_space(std::string_view task, Index max_payload = 0);

/// Longest payload recorded in the sample metadata, 0 if none.
Index max_payload_length(std::span<const Sample> data);

struct ModelSpec {
  ModelKind kind = ModelKind::rmm;
  Index reservoir_size = 128;
  int max_iters = 10;
  bool intercept = true;
};

CrjHyperparams reservoir_hyperparams(const HyperPoint& point, Index reservoir_size,
                                     Index input_dim);

/// A trained ESN, ESGRU or RMM.
struct Model {
  ModelSpec spec;
  HyperPoint hyper;
  CrjHyperparams reservoir;
  ReservoirWeights<double> weights;
  LinearReadout<double> readout;  // baselines
  RmmParams<double> machine;      // rmm
  int iterations = 0;             // rmm alternations

  static Model fit(const ModelSpec& spec, const HyperPoint& hyper,
                   std::span<const Sample> train);
  /// Rebuilds the reservoir from `reservoir` and adopts the given heads.
  static Model from_parts(const ModelSpec& spec, const HyperPoint& hyper,
                          const CrjHyperparams& reservoir,
                          LinearReadout<double> readout,
                          RmmParams<double> machine);

  Sequence<double> predict(const Sequence<double>& X) const;
};

/// Pooled RMSE of `model` over every entry of every sample.
double evaluate(const Model& model, std::span<const Sample> data);

/// Contiguous [begin, end) blocks with sizes differing by at most one.
std::vector<std::pair<Index, Index>> fold_bounds(Index count, Index folds);

struct FoldResult {
  Index fold = 0;
  double rmse = 0;
  double seconds = 0;      // wall clock of search plus refit plus test
  double inner_rmse = 0;   // mean inner-CV score of the chosen point
  HyperPoint chosen;
};

struct CvReport {
  std::string model;
  std::string task;
  std::vector<FoldResult> folds;
  double mean = 0;
  double stddev = 0;  // population standard deviation over folds
};

struct SearchResult {
  HyperPoint point;
  double score = 0;  // mean inner-CV RMSE, infinite if every fit failed
};

/// Draws `trials` points from `space` and keeps the one with the lowest
/// inner-CV RMSE over `inner_folds` contiguous blocks; the first draw wins ties.
SearchResult search_hyper(std::span<const Sample> train, const ModelSpec& spec,
                          const HyperSpace& space, Index trials, Index inner_folds,
                          std::mt19937_64& rng);

struct CvOptions {
  ModelSpec model;
  HyperSpace space;
  Index folds = 20;
  Index trials = 10;
  Index inner_folds = 3;
  std::uint64_t seed = 0;
  std::function<void(const FoldResult&)> on_fold;  // called after each fold
};

/// Outer CV over contiguous blocks; each fold picks the best of `trials`
/// random points by inner CV on its training part, refits and tests. The
/// dataset size must be divisible by `folds`.
CvReport crossvalidate(std::span<const Sample> data, const CvOptions& options,
                       std::string task = {});

struct RuntimeRow {
  Index length = 0;
  std::string model;
  double train_mean = 0, train_std = 0;
  double pred_mean = 0, pred_std = 0;
};

/// Times fit and predict on shift-by-one sequences of the given lengths.
std::vector<RuntimeRow> bench_runtime(std::span<const Index> lengths,
                                      const ModelSpec& spec,
                                      const HyperPoint& hyper, int repeats,
                                      std::uint64_t seed);

double mean_of(std::span<const double> values);
double population_stddev(std::span<const double> values);

}  // namespace rmm
