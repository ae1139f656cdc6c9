// rmm: generate task data, cross-validate models, train, predict and time them.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rmm/harness.hpp"
#include "rmm/io.hpp"
#include "rmm/metrics.hpp"

namespace {

using rmm::Index;
using rmm::io::json;

const std::vector<std::string> kTasks{"latch", "copy", "repeat_copy"};
const std::vector<std::string> kModels{"esn", "esgru", "rmm"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

// Fills options that were not given on the command line from a JSON object.
// Keys are option names without the leading dashes; '_' and '-' are
// interchangeable.
void apply_config(CLI::App& cmd, const std::string& path) {
  if (path.empty()) return;
  const json cfg = rmm::io::read_json_file(path);
  if (!cfg.is_object()) throw UsageError(path + ": config must be a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    if (name == "config") continue;
    CLI::Option* opt = cmd.get_option_no_throw("--" + name);
    if (!opt) throw UsageError(path + ": unknown option \"" + key + "\" for " + cmd.get_name());
    if (opt->count() > 0) continue;  // command line wins
    auto as_text = [](const json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    if (value.is_array())
      for (const auto& v : value) opt->add_result(as_text(v));
    else
      opt->add_result(as_text(value));
    opt->run_callback();
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

void check_member(const std::string& value, const std::vector<std::string>& valid,
                  const char* what) {
  if (std::find(valid.begin(), valid.end(), value) == valid.end())
    throw UsageError("unknown " + std::string(what) + " \"" + value +
                     "\"; valid " + what + "s: " + join(valid));
}

void add_hyper_options(CLI::App* cmd, rmm::HyperPoint& h) {
  cmd->add_option("--input-weight", h.input_weight, "input weight magnitude")
      ->capture_default_str();
  cmd->add_option("--cycle-weight", h.cycle_weight, "cycle weight")->capture_default_str();
  cmd->add_option("--jump-weight", h.jump_weight, "jump weight")->capture_default_str();
  cmd->add_option("--jump-length", h.jump_length, "jump length")->capture_default_str();
  cmd->add_option("--lambda", h.lambda, "ridge regularization")->capture_default_str();
  cmd->add_option("--memory-size", h.memory_size, "memory slots K")->capture_default_str();
}

void add_model_options(CLI::App* cmd, std::string& model, rmm::ModelSpec& spec) {
  cmd->add_option("--model", model, "esn, esgru or rmm")->capture_default_str();
  cmd->add_option("--reservoir-size", spec.reservoir_size, "reservoir neurons")
      ->capture_default_str();
  cmd->add_option("--max-iters", spec.max_iters, "RMM alternation limit")
      ->capture_default_str();
}

rmm::ModelSpec finish_spec(const std::string& model, rmm::ModelSpec spec) {
  check_member(model, kModels, "model");
  spec.kind = rmm::parse_model_kind(model);
  return spec;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string task, out, config;
  Index n = 200;
  std::uint64_t seed = 0;
  rmm::LatchOptions latch;
  rmm::RepeatCopyOptions copy;
};

int run_generate(GenerateArgs& a) {
  require(a.task, "--task");
  check_member(a.task, kTasks, "task");
  require(a.out, "--out");
  if (a.n < 1) throw UsageError("--n must be positive");
  std::vector<rmm::Sample> data;
  data.reserve(static_cast<std::size_t>(a.n));
  for (Index i = 0; i < a.n; ++i) {
    const auto seed = rmm::derive_seed(a.seed, static_cast<std::uint64_t>(i));
    if (a.task == "latch")
      data.push_back(rmm::gen_latch(seed, a.latch));
    else if (a.task == "copy")
      data.push_back(rmm::gen_copy(seed, {a.copy.max_payload, a.copy.bits}));
    else
      data.push_back(rmm::gen_repeat_copy(seed, a.copy));
  }
  rmm::io::write_dataset(a.out, data);
  return 0;
}

struct CrossvalArgs {
  std::string data, model = "rmm", out, summary, config;
  rmm::ModelSpec spec;
  Index folds = 20, trials = 10, inner_folds = 3;
  std::uint64_t seed = 0;
  bool quiet = false;
};

int run_crossval(CrossvalArgs& a) {
  require(a.data, "--data");
  const auto data = rmm::io::read_dataset(a.data);
  if (data.empty()) throw UsageError(a.data + ": empty dataset");
  rmm::CvOptions opt;
  opt.model = finish_spec(a.model, a.spec);
  opt.space = rmm::default_hyper_space(data.front().meta.task,
                                       rmm::max_payload_length(data));
  opt.folds = a.folds;
  opt.trials = a.trials;
  opt.inner_folds = a.inner_folds;
  opt.seed = a.seed;
  if (!a.quiet)
    opt.on_fold = [&](const rmm::FoldResult& f) {
      std::cerr << "fold " << f.fold + 1 << "/" << a.folds << ": rmse " << f.rmse
                << " (" << f.seconds << " s)\n";
    };
  const auto report = rmm::crossvalidate(data, opt);

  if (!a.out.empty()) {
    std::ostringstream csv;
    rmm::io::write_results_csv(csv, report);
    rmm::io::write_text_file(a.out, csv.str());
    std::string summary = a.summary;
    if (summary.empty())
      summary = std::filesystem::path(a.out).replace_extension(".json").string();
    rmm::io::write_text_file(summary, rmm::io::summary_to_json(report).dump(2) + "\n");
  } else if (!a.summary.empty()) {
    rmm::io::write_text_file(a.summary, rmm::io::summary_to_json(report).dump(2) + "\n");
  }
  std::cout << "RMSE: " << report.mean << " +- " << report.stddev << "\n";
  return 0;
}

struct BenchArgs {
  std::string model = "rmm", out, config;
  rmm::ModelSpec spec;
  rmm::HyperPoint hyper;
  std::vector<Index> lengths{100, 500, 1000, 2000};
  int repeats = 3;
  std::uint64_t seed = 0;
};

int run_bench(BenchArgs& a) {
  for (Index T : a.lengths)
    if (T < 2) throw UsageError("--lengths must be integers >= 2");
  const auto rows = rmm::bench_runtime(a.lengths, finish_spec(a.model, a.spec), a.hyper,
                                       a.repeats, a.seed);
  std::ostringstream csv;
  rmm::io::write_runtimes_csv(csv, rows);
  if (a.out.empty())
    std::cout << csv.str();
  else
    rmm::io::write_text_file(a.out, csv.str());
  return 0;
}

struct TrainArgs {
  std::string data, model = "rmm", out, config;
  rmm::ModelSpec spec;
  rmm::HyperPoint hyper;
  Index trials = 10, inner_folds = 3;
  std::uint64_t seed = 0;
};

int run_train(TrainArgs& a) {
  require(a.data, "--data");
  require(a.out, "--out");
  const auto data = rmm::io::read_dataset(a.data);
  if (data.empty()) throw UsageError(a.data + ": empty dataset");
  const auto spec = finish_spec(a.model, a.spec);
  rmm::HyperPoint hyper = a.hyper;
  if (a.trials > 0) {
    std::mt19937_64 rng(rmm::derive_seed(a.seed, 0));
    const auto space = rmm::default_hyper_space(data.front().meta.task,
                                                rmm::max_payload_length(data));
    hyper = rmm::search_hyper(data, spec, space, a.trials, a.inner_folds, rng).point;
  }
  const auto model = rmm::Model::fit(spec, hyper, data);
  rmm::io::write_model(a.out, model);
  std::cout << "train RMSE: " << rmm::evaluate(model, data) << "\n";
  return 0;
}

struct PredictArgs {
  std::string data, model_file, out, config;
};

int run_predict(PredictArgs& a) {
  require(a.data, "--data");
  require(a.model_file, "--model-file");
  const auto data = rmm::io::read_dataset(a.data);
  const auto model = rmm::io::read_model(a.model_file);
  json out = json::array();
  rmm::PooledRmse<double> pooled;
  for (const auto& s : data) {
    const auto Y = model.predict(s.inputs);
    pooled.add(s.targets, Y);
    out.push_back({{"Y", rmm::io::matrix_to_json(Y)}, {"rmse", rmm::rmse(s.targets, Y)}});
  }
  if (a.out.empty())
    std::cout << out.dump() << "\n";
  else
    rmm::io::write_text_file(a.out, out.dump() + "\n");
  std::cerr << "RMSE: " << pooled.value() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reservoir memory machines: data generation, training and evaluation"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a JSON dataset of task samples");
  g->add_option("--task", gen.task, "latch, copy or repeat_copy");
  g->add_option("--n", gen.n, "number of samples")->capture_default_str();
  g->add_option("--seed", gen.seed, "base seed")->capture_default_str();
  g->add_option("--out", gen.out, "output JSON file");
  g->add_option("--min-len", gen.latch.min_len, "latch: shortest sequence")
      ->capture_default_str();
  g->add_option("--max-len", gen.latch.max_len, "latch: longest sequence")
      ->capture_default_str();
  g->add_option("--spikes", gen.latch.n_spikes, "latch: spikes per sequence")
      ->capture_default_str();
  g->add_option("--max-payload", gen.copy.max_payload, "copy: longest payload")
      ->capture_default_str();
  g->add_option("--bits", gen.copy.bits, "copy: payload width")->capture_default_str();
  g->add_option("--max-repeats", gen.copy.max_repeats, "repeat_copy: most repeats")
      ->capture_default_str();
  g->add_option("--config", gen.config, "JSON file with option defaults");

  CrossvalArgs cv;
  auto* c = app.add_subcommand("crossval", "nested cross-validation with random search");
  c->add_option("--data", cv.data, "dataset JSON file");
  add_model_options(c, cv.model, cv.spec);
  c->add_option("--folds", cv.folds, "outer folds")->capture_default_str();
  c->add_option("--trials", cv.trials, "random-search trials per fold")
      ->capture_default_str();
  c->add_option("--inner-folds", cv.inner_folds, "inner folds")->capture_default_str();
  c->add_option("--seed", cv.seed, "search seed")->capture_default_str();
  c->add_option("--out", cv.out, "results CSV (summary goes next to it as .json)");
  c->add_option("--summary", cv.summary, "summary JSON path");
  c->add_flag("--quiet", cv.quiet, "no per-fold progress on stderr");
  c->add_option("--config", cv.config, "JSON file with option defaults");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "time training and prediction");
  b->add_option("--lengths", bench.lengths, "comma-separated sequence lengths")
      ->delimiter(',')
      ->capture_default_str();
  add_model_options(b, bench.model, bench.spec);
  add_hyper_options(b, bench.hyper);
  b->add_option("--repeats", bench.repeats, "repetitions per length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  b->add_option("--seed", bench.seed, "data seed")->capture_default_str();
  b->add_option("--out", bench.out, "runtimes CSV (stdout if omitted)");
  b->add_option("--config", bench.config, "JSON file with option defaults");

  TrainArgs tr;
  auto* t = app.add_subcommand("train", "fit a model and write it as JSON");
  t->add_option("--data", tr.data, "dataset JSON file");
  add_model_options(t, tr.model, tr.spec);
  add_hyper_options(t, tr.hyper);
  t->add_option("--trials", tr.trials, "random-search trials; 0 uses the given values")
      ->capture_default_str();
  t->add_option("--inner-folds", tr.inner_folds, "folds for the search")
      ->capture_default_str();
  t->add_option("--seed", tr.seed, "search seed")->capture_default_str();
  t->add_option("--out", tr.out, "model JSON file");
  t->add_option("--config", tr.config, "JSON file with option defaults");

  PredictArgs pr;
  auto* p = app.add_subcommand("predict", "run a trained model over a dataset");
  p->add_option("--data", pr.data, "dataset JSON file");
  p->add_option("--model-file", pr.model_file, "model JSON file");
  p->add_option("--out", pr.out, "predictions JSON (stdout if omitted)");
  p->add_option("--config", pr.config, "JSON file with option defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (g->parsed()) {
      apply_config(*g, gen.config);
      return run_generate(gen);
    }
    if (c->parsed()) {
      apply_config(*c, cv.config);
      return run_crossval(cv);
    }
    if (b->parsed()) {
      apply_config(*b, bench.config);
      return run_bench(bench);
    }
    if (t->parsed()) {
      apply_config(*t, tr.config);
      return run_train(tr);
    }
    if (p->parsed()) {
      apply_config(*p, pr.config);
      return run_predict(pr);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
