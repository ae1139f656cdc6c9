// Acceptance checks. Prints one PASS/FAIL line per criterion; exits nonzero
// if any selected criterion fails. Usage: acceptance [criterion ...]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rmm/alignment.hpp"
#include "rmm/harness.hpp"
#include "rmm/machine.hpp"
#include "rmm/ridge.hpp"

using namespace rmm;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr Index kSamples = 50;
constexpr Index kFolds = 5;
constexpr Index kTrials = 10;
constexpr Index kInnerFolds = 3;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Sample> desk_data(const std::string& task) {
  std::vector<Sample> data;
  for (Index i = 0; i < kSamples; ++i) {
    const auto seed = derive_seed(kSeed, static_cast<std::uint64_t>(i));
    if (task == "latch")
      data.push_back(gen_latch(seed));
    else if (task == "copy")
      data.push_back(gen_copy(seed, {10, 8}));
    else
      data.push_back(gen_repeat_copy(seed, {8, 8, 3}));
  }
  return data;
}

// Desk-scale cross-validation, cached per (task, model).
const CvReport& desk_cv(const std::string& task, ModelKind kind) {
  static std::map<std::pair<std::string, ModelKind>, CvReport> cache;
  auto key = std::make_pair(task, kind);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const auto data = desk_data(task);
  CvOptions opt;
  opt.model.kind = kind;
  opt.space = default_hyper_space(task, max_payload_length(data));
  opt.folds = kFolds;
  opt.trials = kTrials;
  opt.inner_folds = kInnerFolds;
  opt.seed = kSeed;
  const auto t0 = std::chrono::steady_clock::now();
  auto report = crossvalidate(data, opt);
  std::cout << "  " << task << " " << to_string(kind) << ": " << fmt(report.mean)
            << " +- " << fmt(report.stddev) << " in " << fmt(seconds_since(t0)) << " s (folds";
  for (const auto& f : report.folds) std::cout << " " << fmt(f.rmse);
  std::cout << ")\n";
  return cache.emplace(key, std::move(report)).first->second;
}

Outcome latch_accuracy() {
  const auto& r = desk_cv("latch", ModelKind::rmm);
  return {r.mean < 1e-2, "rmm mean " + fmt(r.mean) + " (< 1e-2)"};
}

Outcome copy_accuracy() {
  const auto& rmm = desk_cv("copy", ModelKind::rmm);
  const auto& esn = desk_cv("copy", ModelKind::esn);
  const bool pass = rmm.mean < 0.1 && 2 * rmm.mean <= esn.mean;
  return {pass, "rmm mean " + fmt(rmm.mean) + " (< 0.1), esn mean " + fmt(esn.mean) +
                    " (>= 2x rmm)"};
}

Outcome repeat_copy_accuracy() {
  const auto& rmm = desk_cv("repeat_copy", ModelKind::rmm);
  const auto& esn = desk_cv("repeat_copy", ModelKind::esn);
  const auto& gru = desk_cv("repeat_copy", ModelKind::esgru);
  const bool pass = rmm.mean < 0.15 && rmm.mean < esn.mean && rmm.mean < gru.mean;
  return {pass, "rmm mean " + fmt(rmm.mean) + " (< 0.15), esn " + fmt(esn.mean) +
                    ", esgru " + fmt(gru.mean) + " (both above rmm)"};
}

Outcome baseline_failure() {
  bool pass = true;
  std::string detail;
  for (const char* task : {"copy", "repeat_copy"}) {
    for (auto kind : {ModelKind::esn, ModelKind::esgru}) {
      const auto& r = desk_cv(task, kind);
      pass &= r.mean > 0.2;
      detail += std::string(detail.empty() ? "" : ", ") + task + "/" +
                std::string(to_string(kind)) + " " + fmt(r.mean);
    }
  }
  return {pass, detail + " (all > 0.2)"};
}

Outcome latch_extrapolation() {
  std::vector<Sample> train;
  for (Index i = 0; i < 100; ++i)
    train.push_back(gen_latch(derive_seed(kSeed + 17, static_cast<std::uint64_t>(i))));
  ModelSpec spec;
  std::mt19937_64 rng(derive_seed(kSeed + 17, 1000));
  const auto found = search_hyper(train, spec, default_hyper_space("latch"), kTrials,
                                  kInnerFolds, rng);
  const auto model = Model::fit(spec, found.point, train);

  const auto test = gen_latch(derive_seed(kSeed + 17, 5000), {1700, 1700, 8});
  const auto run = rmm_run(model.weights, model.machine, test.inputs);
  const double err = rmse(test.targets, run.outputs);
  const auto writes = std::count_if(run.traces.begin(), run.traces.end(),
                                    [](const auto& t) { return t.wrote; });
  return {err < 1e-2 && writes <= 2,
          "T = 1700 with 8 spikes: rmse " + fmt(err) + " (< 1e-2), writes " +
              std::to_string(writes) + " (<= 2), train rmse " +
              fmt(evaluate(model, train))};
}

Outcome runtime_ordering() {
  const std::vector<Index> lengths{100, 500, 1000, 2000};
  const HyperPoint hyper;
  ModelSpec esn_spec, rmm_spec;
  esn_spec.kind = ModelKind::esn;
  rmm_spec.kind = ModelKind::rmm;
  const auto esn = bench_runtime(lengths, esn_spec, hyper, 5, kSeed);
  const auto rmm = bench_runtime(lengths, rmm_spec, hyper, 5, kSeed);
  bool pass = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    pass &= esn[i].train_mean < 1.0;
    pass &= rmm[i].pred_mean <= 3 * esn[i].pred_mean;
    std::cout << "  T=" << lengths[i] << " train esn " << fmt(esn[i].train_mean)
              << " s, rmm " << fmt(rmm[i].train_mean) << " s (ratio "
              << fmt(rmm[i].train_mean / esn[i].train_mean) << "); predict esn "
              << fmt(esn[i].pred_mean) << " s, rmm " << fmt(rmm[i].pred_mean) << " s\n";
  }
  pass &= rmm.back().train_mean < 60.0;
  detail << "esn train max " << fmt(esn.back().train_mean) << " s (< 1), rmm train at 2000 "
         << fmt(rmm.back().train_mean) << " s (< 60), predict ratio max ";
  double worst = 0;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    worst = std::max(worst, rmm[i].pred_mean / esn[i].pred_mean);
  detail << fmt(worst) << " (<= 3)";
  return {pass, detail.str()};
}

// Minimum summed read error over all 3^T head trajectories from slot 0.
double exhaustive_alignment(const std::vector<Matrix<double>>& memory,
                            const Matrix<double>& Y, const Matrix<double>& R) {
  const Index T = Y.rows(), K = memory.front().rows();
  Index combos = 1;
  for (Index t = 0; t < T; ++t) combos *= 3;
  double best = std::numeric_limits<double>::infinity();
  for (Index code = 0; code < combos; ++code) {
    Index c = code, pos = 0;
    double total = 0;
    for (Index t = 0; t < T; ++t) {
      const int a = static_cast<int>(c % 3);
      c /= 3;
      pos = a == 0 ? pos : a == 1 ? (pos + 1) % K : 0;
      total += (R * memory[static_cast<std::size_t>(t)].row(pos).transpose() -
                Y.row(t).transpose())
                   .norm();
    }
    best = std::min(best, total);
  }
  return best;
}

Outcome alignment_oracle() {
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> N(0, 1);
  double worst = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const Index K = 2 + rep % 2, T = 1 + (rep / 2) % 6, n = 3, L = 2;
    std::vector<Matrix<double>> memory(static_cast<std::size_t>(T), Matrix<double>(K, n));
    for (auto& M : memory)
      for (Index i = 0; i < M.size(); ++i) M.data()[i] = N(rng);
    Matrix<double> Y(T, L), R(L, n);
    for (Index i = 0; i < Y.size(); ++i) Y.data()[i] = N(rng);
    for (Index i = 0; i < R.size(); ++i) R.data()[i] = N(rng);
    const double dp = align_memory(memory, Y, R).optimal_cost;
    worst = std::max(worst, std::abs(dp - exhaustive_alignment(memory, Y, R)));
  }
  return {worst <= 1e-9, "50 instances, max |dp - exhaustive| " + fmt(worst) + " (<= 1e-9)"};
}

Outcome esn_reduction() {
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> N(0, 1);
  std::uniform_real_distribution<double> U(0, 1);
  double worst = 0;
  for (int rep = 0; rep < 20; ++rep) {
    CrjHyperparams hp;
    hp.reservoir_size = 16 + 8 * (rep % 4);
    hp.input_dim = 1 + rep % 3;
    hp.input_weight = 0.05 + 0.9 * U(rng);
    hp.cycle_weight = 0.99 * U(rng);
    hp.jump_weight = 0.99 * U(rng);
    hp.jump_length = 2 + rep % 5;
    const auto w = build_crj<double>(hp, WarningSink{});
    const Index m = hp.reservoir_size, n = hp.input_dim, L = 2;
    auto p = RmmParams<double>::zeros(n, m, L, 2 + rep % 5);
    auto fill = [&](auto& M) {
      for (Index i = 0; i < M.size(); ++i) M.data()[i] = N(rng);
    };
    p.write_bias = N(rng);
    fill(p.write_input);
    fill(p.write_state);
    fill(p.read_bias);
    fill(p.read_input);
    fill(p.read_state);
    fill(p.readout_bias);
    fill(p.readout_state);
    Sequence<double> X(50 + rep, n);
    fill(X);
    const auto Y = rmm_run(w, p, X, RolloutDetail::outputs_only).outputs;
    Sequence<double> ref = esn_run(w, X) * p.readout_state.transpose();
    ref.rowwise() += p.readout_bias.transpose();
    worst = std::max(worst, (Y - ref).cwiseAbs().maxCoeff());
  }
  return {worst <= 1e-12, "20 draws, max deviation " + fmt(worst) + " (<= 1e-12)"};
}

Outcome ridge_correctness() {
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> N(0, 1);
  auto gaussian = [&](Index r, Index c) {
    Matrix<double> M(r, c);
    for (Index i = 0; i < M.size(); ++i) M.data()[i] = N(rng);
    return M;
  };
  double worst_residual = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const Index d = 1 + rep % 12, N_ = d + 1 + rep, L = 1 + rep % 4;
    const auto F = gaussian(d, N_);
    const auto Y = gaussian(L, N_);
    const double lambda = rep % 3 == 0 ? 0.0 : std::pow(10.0, -(rep % 8));
    const auto theta = ridge_fit(F, Y, lambda);
    const Matrix<double> YF = Y * F.transpose();
    const Matrix<double> A = F * F.transpose() + lambda * Matrix<double>::Identity(d, d);
    worst_residual = std::max(worst_residual, (theta * A - YF).cwiseAbs().maxCoeff() /
                                                  YF.cwiseAbs().maxCoeff());
  }
  double worst_recovery = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const Index d = 1 + rep % 8, L = 1 + rep % 3;
    const auto F = gaussian(d, d);
    const auto truth = gaussian(L, d);
    const Matrix<double> Y = truth * F;
    worst_recovery =
        std::max(worst_recovery, (ridge_fit(F, Y, 0.0) - truth).cwiseAbs().maxCoeff());
  }
  return {worst_residual <= 1e-8 && worst_recovery <= 1e-8,
          "max relative residual " + fmt(worst_residual) + " (<= 1e-8), square recovery error " +
              fmt(worst_recovery) + " (<= 1e-8)"};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "latch accuracy", latch_accuracy},
      {2, "copy accuracy", copy_accuracy},
      {3, "repeat copy accuracy", repeat_copy_accuracy},
      {4, "baseline failure", baseline_failure},
      {5, "latch extrapolation", latch_extrapolation},
      {6, "runtime ordering", runtime_ordering},
      {7, "alignment oracle equivalence", alignment_oracle},
      {8, "esn reduction", esn_reduction},
      {9, "ridge correctness", ridge_correctness},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.id) == selected.end())
      continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += out.pass ? 0 : 1;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
              << "): " << out.detail << " [" << fmt(seconds_since(t0)) << " s]"
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
