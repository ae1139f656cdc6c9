#include "rmm/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rmm/metrics.hpp"

namespace rmm {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::esn: return "esn";
    case ModelKind::esgru: return "esgru";
    case ModelKind::rmm: return "rmm";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "esn") return ModelKind::esn;
  if (name == "esgru") return ModelKind::esgru;
  if (name == "rmm") return ModelKind::rmm;
  throw std::invalid_argument("unknown model '" + std::string(name) +
                              "' (valid: esn, esgru, rmm)");
}

Index HyperSpace::max_jump_length(Index reservoir_size) const {
  const Index half = reservoir_size / 2;
  return jump_length_max > 0 ? std::min(jump_length_max, half) : half;
}

void HyperSpace::validate(Index reservoir_size) const {
  auto fail = [](const std::string& msg) {
    throw std::invalid_argument("HyperSpace: " + msg);
  };
  if (!(input_weight_min > -1.0 && input_weight_min <= input_weight_max &&
        input_weight_max < 1.0))
    fail("input weight range must lie inside (-1, 1)");
  if (!(cycle_weight_min >= 0.0 && cycle_weight_min <= cycle_weight_max &&
        cycle_weight_max < 1.0))
    fail("cycle weight range must lie inside [0, 1)");
  if (!(jump_weight_min >= 0.0 && jump_weight_min <= jump_weight_max &&
        jump_weight_max < 1.0))
    fail("jump weight range must lie inside [0, 1)");
  const Index lmax = max_jump_length(reservoir_size);
  if (jump_length_min < 2 || lmax < jump_length_min || lmax >= reservoir_size - 1)
    fail("jump length range is empty or violates 1 < l < m - 1");
  if (!(log10_lambda_min <= log10_lambda_max)) fail("empty lambda range");
  if (memory_sizes.empty()) fail("no memory sizes to search");
  for (Index K : memory_sizes)
    if (K < 2) fail("memory sizes must be at least 2");
}

HyperPoint HyperSpace::sample(std::mt19937_64& rng, Index reservoir_size) const {
  validate(reservoir_size);
  using real = std::uniform_real_distribution<double>;
  const Index lmax = max_jump_length(reservoir_size);
  HyperPoint p;
  p.input_weight = real(input_weight_min, input_weight_max)(rng);
  p.cycle_weight = real(cycle_weight_min, cycle_weight_max)(rng);
  p.jump_weight = real(jump_weight_min, jump_weight_max)(rng);
  p.jump_length = std::uniform_int_distribution<Index>(jump_length_min, lmax)(rng);
  p.lambda = std::pow(10.0, real(log10_lambda_min, log10_lambda_max)(rng));
  p.memory_size = memory_sizes[std::uniform_int_distribution<std::size_t>(
      0, memory_sizes.size() - 1)(rng)];
  return p;
}

HyperSpace default_hyper_space(std::string_view task, Index max_payload) {
  HyperSpace space;
  if (task == "latch") {
    space.memory_sizes = {2};
    space.jump_weight_min = 0.5;
    space.jump_length_max = 32;
    space.log10_lambda_max = -2.0;
  } else if (max_payload > 0) {
    // The memory must hold a whole payload.
    std::vector<Index> sizes;
    for (Index k : space.memory_sizes)
      if (k >= max_payload) sizes.push_back(k);
    if (sizes.empty()) sizes.push_back(std::bit_ceil(static_cast<std::size_t>(max_payload)));
    space.memory_sizes = std::move(sizes);
  }
  return space;
}

Index max_payload_length(std::span<const Sample> data) {
  Index p = 0;
  for (const auto& s : data) p = std::max(p, s.meta.payload_length);
  return p;
}

CrjHyperparams reservoir_hyperparams(const HyperPoint& point, Index reservoir_size,
                                     Index input_dim) {
  CrjHyperparams hp;
  hp.input_weight = point.input_weight;
  hp.cycle_weight = point.cycle_weight;
  hp.jump_weight = point.jump_weight;
  hp.jump_length = point.jump_length;
  hp.reservoir_size = reservoir_size;
  hp.input_dim = input_dim;
  return hp;
}

Model Model::fit(const ModelSpec& spec, const HyperPoint& hyper,
                 std::span<const Sample> train) {
  if (train.empty()) throw std::invalid_argument("Model::fit: empty training set");
  Model model;
  model.spec = spec;
  model.hyper = hyper;
  model.reservoir =
      reservoir_hyperparams(hyper, spec.reservoir_size, train.front().inputs.cols());
  model.weights = build_crj<double>(model.reservoir, WarningSink{});
  switch (spec.kind) {
    case ModelKind::esn:
    case ModelKind::esgru:
      model.readout = fit_readout<double>(
          model.weights, train, hyper.lambda,
          spec.kind == ModelKind::esn ? Dynamics::esn : Dynamics::esgru,
          spec.intercept);
      break;
    case ModelKind::rmm: {
      RmmTrainOptions opt;
      opt.lambda = hyper.lambda;
      opt.memory_size = hyper.memory_size;
      opt.max_iters = spec.max_iters;
      opt.intercept = spec.intercept;
      auto report = fit_rmm<double>(model.weights, train, opt);
      model.machine = std::move(report.final_params);
      model.iterations = report.iterations;
      break;
    }
  }
  return model;
}

Model Model::from_parts(const ModelSpec& spec, const HyperPoint& hyper,
                        const CrjHyperparams& reservoir,
                        LinearReadout<double> readout, RmmParams<double> machine) {
  Model model;
  model.spec = spec;
  model.hyper = hyper;
  model.reservoir = reservoir;
  model.weights = build_crj<double>(reservoir, WarningSink{});
  model.readout = std::move(readout);
  model.machine = std::move(machine);
  if (spec.kind == ModelKind::rmm) {
    model.machine.validate();
    require_dims(model.machine.reservoir_size() == reservoir.reservoir_size &&
                     model.machine.input_dim() == reservoir.input_dim,
                 "Model: machine parameters do not match the reservoir");
  } else {
    require_dims(model.readout.weights.cols() == reservoir.reservoir_size &&
                     model.readout.bias.size() == model.readout.weights.rows(),
                 "Model: readout does not match the reservoir");
  }
  return model;
}

Sequence<double> Model::predict(const Sequence<double>& X) const {
  switch (spec.kind) {
    case ModelKind::esn: return readout.apply(esn_run(weights, X));
    case ModelKind::esgru: return readout.apply(esgru_run(weights, X));
    case ModelKind::rmm:
      return rmm_run(weights, machine, X, RolloutDetail::outputs_only).outputs;
  }
  return {};
}

double evaluate(const Model& model, std::span<const Sample> data) {
  PooledRmse<double> err;
  for (const auto& s : data) err.add(s.targets, model.predict(s.inputs));
  return err.value();
}

std::vector<std::pair<Index, Index>> fold_bounds(Index count, Index folds) {
  if (folds < 1 || count < folds)
    throw std::invalid_argument("fold_bounds: need 1 <= folds <= count");
  std::vector<std::pair<Index, Index>> out;
  Index begin = 0;
  for (Index f = 0; f < folds; ++f) {
    const Index size = count / folds + (f < count % folds ? 1 : 0);
    out.emplace_back(begin, begin + size);
    begin += size;
  }
  return out;
}

namespace {

std::vector<Sample> without_block(std::span<const Sample> data, Index begin,
                                  Index end) {
  std::vector<Sample> out;
  out.reserve(data.size() - static_cast<std::size_t>(end - begin));
  for (Index i = 0; i < static_cast<Index>(data.size()); ++i)
    if (i < begin || i >= end) out.push_back(data[static_cast<std::size_t>(i)]);
  return out;
}

double inner_score(std::span<const Sample> train, const ModelSpec& spec,
                   const HyperPoint& point, Index inner_folds) {
  double total = 0;
  for (auto [b, e] : fold_bounds(static_cast<Index>(train.size()), inner_folds)) {
    const auto fit_part = without_block(train, b, e);
    const auto model = Model::fit(spec, point, fit_part);
    total += evaluate(model, train.subspan(static_cast<std::size_t>(b),
                                           static_cast<std::size_t>(e - b)));
  }
  const double score = total / static_cast<double>(inner_folds);
  return std::isfinite(score) ? score : std::numeric_limits<double>::infinity();
}

}  // namespace

SearchResult search_hyper(std::span<const Sample> train, const ModelSpec& spec,
                          const HyperSpace& space, Index trials, Index inner_folds,
                          std::mt19937_64& rng) {
  if (trials < 1) throw std::invalid_argument("search_hyper: need at least one trial");
  if (inner_folds < 2 || inner_folds > static_cast<Index>(train.size()))
    throw std::invalid_argument("search_hyper: invalid inner fold count");
  SearchResult best;
  best.score = std::numeric_limits<double>::infinity();
  for (Index trial = 0; trial < trials; ++trial) {
    const HyperPoint point = space.sample(rng, spec.reservoir_size);
    double score;
    try {
      score = inner_score(train, spec, point, inner_folds);
    } catch (const SingularSystemError&) {
      score = std::numeric_limits<double>::infinity();
    }
    if (trial == 0 || score < best.score) {
      best.score = score;
      best.point = point;
    }
  }
  return best;
}

CvReport crossvalidate(std::span<const Sample> data, const CvOptions& options,
                       std::string task) {
  const Index N = static_cast<Index>(data.size());
  if (options.folds < 2)
    throw std::invalid_argument("crossvalidate: need at least 2 folds");
  if (N == 0 || N % options.folds != 0)
    throw std::invalid_argument("crossvalidate: dataset size " + std::to_string(N) +
                                " is not divisible by " +
                                std::to_string(options.folds) + " folds");
  if (options.trials < 1)
    throw std::invalid_argument("crossvalidate: need at least one trial");
  options.space.validate(options.model.reservoir_size);
  const Index train_size = N - N / options.folds;
  if (options.inner_folds < 2 || options.inner_folds > train_size)
    throw std::invalid_argument("crossvalidate: invalid inner fold count");

  CvReport report;
  report.model = std::string(to_string(options.model.kind));
  report.task = task.empty() ? data.front().meta.task : std::move(task);

  std::vector<double> scores;
  for (auto [b, e] : fold_bounds(N, options.folds)) {
    const auto start = std::chrono::steady_clock::now();
    const Index fold = b / (N / options.folds);
    const auto train = without_block(data, b, e);
    const auto test = data.subspan(static_cast<std::size_t>(b),
                                   static_cast<std::size_t>(e - b));

    std::mt19937_64 rng(derive_seed(options.seed, static_cast<std::uint64_t>(fold)));
    const auto search = search_hyper(train, options.model, options.space,
                                     options.trials, options.inner_folds, rng);
    FoldResult result;
    result.fold = fold;
    result.inner_rmse = search.score;
    result.chosen = search.point;
    const auto model = Model::fit(options.model, result.chosen, train);
    result.rmse = evaluate(model, test);
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    scores.push_back(result.rmse);
    if (options.on_fold) options.on_fold(result);
    report.folds.push_back(result);
  }
  report.mean = mean_of(scores);
  report.stddev = population_stddev(scores);
  return report;
}

std::vector<RuntimeRow> bench_runtime(std::span<const Index> lengths,
                                      const ModelSpec& spec,
                                      const HyperPoint& hyper, int repeats,
                                      std::uint64_t seed) {
  if (lengths.empty()) throw std::invalid_argument("bench_runtime: no lengths given");
  if (repeats < 1) throw std::invalid_argument("bench_runtime: repeats must be positive");
  using clock = std::chrono::steady_clock;
  std::vector<RuntimeRow> rows;
  for (Index T : lengths) {
    std::vector<double> train_s, pred_s;
    for (int r = 0; r < repeats; ++r) {
      const auto sample = gen_shift_benchmark(
          derive_seed(seed, static_cast<std::uint64_t>(T * 1000 + r)), T);
      const std::span<const Sample> one(&sample, 1);
      const auto t0 = clock::now();
      const auto model = Model::fit(spec, hyper, one);
      const auto t1 = clock::now();
      const auto Y = model.predict(sample.inputs);
      const auto t2 = clock::now();
      if (Y.rows() != T) throw std::logic_error("bench_runtime: bad prediction");
      train_s.push_back(std::chrono::duration<double>(t1 - t0).count());
      pred_s.push_back(std::chrono::duration<double>(t2 - t1).count());
    }
    rows.push_back({T, std::string(to_string(spec.kind)), mean_of(train_s),
                    population_stddev(train_s), mean_of(pred_s),
                    population_stddev(pred_s)});
  }
  return rows;
}

double mean_of(std::span<const double> values) {
  if (values.empty()) return 0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

double population_stddev(std::span<const double> values) {
  if (values.empty()) return 0;
  const double mu = mean_of(values);
  double acc = 0;
  for (double v : values) acc += (v - mu) * (v - mu);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

}  // namespace rmm
