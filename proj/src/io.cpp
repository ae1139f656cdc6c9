#include "rmm/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace rmm::io {
namespace {

std::string shortest(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

template <typename T>
T get(const json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const Eigen::Ref<const Matrix<double>>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<double> matrix_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = rows ? static_cast<Index>(j.front().size()) : 0;
  Matrix<double> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError(std::string(what) + ": ragged rows");
    for (Index c = 0; c < cols; ++c) {
      const json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
      m(i, c) = v.get<double>();
    }
  }
  return m;
}

json vector_to_json(const Eigen::Ref<const Vector<double>>& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector<double> vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  Vector<double> v(static_cast<Index>(j.size()));
  for (Index i = 0; i < v.size(); ++i) {
    const json& x = j[static_cast<std::size_t>(i)];
    if (!x.is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
    v(i) = x.get<double>();
  }
  return v;
}

json sample_to_json(const Sample& s) {
  json meta = json::object();
  if (!s.meta.spikes.empty()) meta["spikes"] = s.meta.spikes;
  if (s.meta.payload_length) meta["payload_length"] = s.meta.payload_length;
  if (s.meta.repeats) meta["repeats"] = s.meta.repeats;
  return {{"task", s.meta.task},
          {"n", s.inputs.cols()},
          {"L", s.targets.cols()},
          {"X", matrix_to_json(s.inputs)},
          {"Y", matrix_to_json(s.targets)},
          {"meta", std::move(meta)}};
}

Sample sample_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("sample: expected an object");
  Sample s;
  s.meta.task = get<std::string>(j, "task");
  const auto n = get<Index>(j, "n");
  const auto L = get<Index>(j, "L");
  s.inputs = matrix_from_json(field(j, "X"), "X");
  s.targets = matrix_from_json(field(j, "Y"), "Y");
  if (s.inputs.rows() != s.targets.rows())
    throw ParseError("sample: X and Y differ in length");
  // An empty sequence carries its width only in n / L.
  if (s.inputs.rows() == 0) {
    s.inputs.resize(0, n);
    s.targets.resize(0, L);
  }
  if (s.inputs.cols() != n || s.targets.cols() != L)
    throw ParseError("sample: X or Y width disagrees with n / L");
  if (auto it = j.find("meta"); it != j.end() && it->is_object()) {
    if (it->contains("spikes")) s.meta.spikes = get<std::vector<Index>>(*it, "spikes");
    if (it->contains("payload_length"))
      s.meta.payload_length = get<Index>(*it, "payload_length");
    if (it->contains("repeats")) s.meta.repeats = get<Index>(*it, "repeats");
  }
  return s;
}

json dataset_to_json(std::span<const Sample> data) {
  json out = json::array();
  for (const auto& s : data) out.push_back(sample_to_json(s));
  return out;
}

std::vector<Sample> dataset_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("dataset: expected an array of samples");
  std::vector<Sample> data;
  data.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      data.push_back(sample_from_json(j[i]));
    } catch (const ParseError& e) {
      throw ParseError("sample " + std::to_string(i) + ": " + e.what());
    }
  }
  return data;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_dataset(const std::filesystem::path& path, std::span<const Sample> data) {
  write_text_file(path, dataset_to_json(data).dump() + "\n");
}

std::vector<Sample> read_dataset(const std::filesystem::path& path) {
  try {
    return dataset_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path.string(), 0) == 0 || msg.rfind("cannot open", 0) == 0) throw;
    throw ParseError(path.string() + ": " + msg);
  }
}

json hyper_to_json(const HyperPoint& h) {
  return {{"input_weight", h.input_weight}, {"cycle_weight", h.cycle_weight},
          {"jump_weight", h.jump_weight},   {"jump_length", h.jump_length},
          {"lambda", h.lambda},             {"memory_size", h.memory_size}};
}

HyperPoint hyper_from_json(const json& j) {
  HyperPoint h;
  h.input_weight = get<double>(j, "input_weight");
  h.cycle_weight = get<double>(j, "cycle_weight");
  h.jump_weight = get<double>(j, "jump_weight");
  h.jump_length = get<Index>(j, "jump_length");
  h.lambda = get<double>(j, "lambda");
  h.memory_size = get<Index>(j, "memory_size");
  return h;
}

json model_to_json(const Model& model) {
  const auto& r = model.reservoir;
  json out = {
      {"kind", to_string(model.spec.kind)},
      {"max_iters", model.spec.max_iters},
      {"intercept", model.spec.intercept},
      {"hyper", hyper_to_json(model.hyper)},
      {"reservoir",
       {{"input_weight", r.input_weight},
        {"cycle_weight", r.cycle_weight},
        {"jump_weight", r.jump_weight},
        {"jump_length", r.jump_length},
        {"reservoir_size", r.reservoir_size},
        {"input_dim", r.input_dim}}},
  };
  if (model.spec.kind == ModelKind::rmm) {
    const auto& p = model.machine;
    out["machine"] = {{"memory_size", p.memory_size},
                      {"write_bias", p.write_bias},
                      {"write_input", vector_to_json(p.write_input)},
                      {"write_state", vector_to_json(p.write_state)},
                      {"read_bias", vector_to_json(p.read_bias)},
                      {"read_input", matrix_to_json(p.read_input)},
                      {"read_state", matrix_to_json(p.read_state)},
                      {"readout_bias", vector_to_json(p.readout_bias)},
                      {"readout_state", matrix_to_json(p.readout_state)},
                      {"readout_memory", matrix_to_json(p.readout_memory)}};
  } else {
    out["readout"] = {{"bias", vector_to_json(model.readout.bias)},
                      {"weights", matrix_to_json(model.readout.weights)}};
  }
  return out;
}

Model model_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("model: expected an object");
  ModelSpec spec;
  try {
    spec.kind = parse_model_kind(get<std::string>(j, "kind"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  spec.max_iters = get<int>(j, "max_iters");
  spec.intercept = get<bool>(j, "intercept");
  const HyperPoint hyper = hyper_from_json(field(j, "hyper"));

  const json& rj = field(j, "reservoir");
  CrjHyperparams res;
  res.input_weight = get<double>(rj, "input_weight");
  res.cycle_weight = get<double>(rj, "cycle_weight");
  res.jump_weight = get<double>(rj, "jump_weight");
  res.jump_length = get<Index>(rj, "jump_length");
  res.reservoir_size = get<Index>(rj, "reservoir_size");
  res.input_dim = get<Index>(rj, "input_dim");
  spec.reservoir_size = res.reservoir_size;

  LinearReadout<double> readout;
  RmmParams<double> machine;
  if (spec.kind == ModelKind::rmm) {
    const json& mj = field(j, "machine");
    machine.memory_size = get<Index>(mj, "memory_size");
    machine.write_bias = get<double>(mj, "write_bias");
    machine.write_input = vector_from_json(field(mj, "write_input"), "write_input");
    machine.write_state = vector_from_json(field(mj, "write_state"), "write_state");
    machine.read_bias = vector_from_json(field(mj, "read_bias"), "read_bias");
    machine.read_input = matrix_from_json(field(mj, "read_input"), "read_input");
    machine.read_state = matrix_from_json(field(mj, "read_state"), "read_state");
    machine.readout_bias = vector_from_json(field(mj, "readout_bias"), "readout_bias");
    machine.readout_state = matrix_from_json(field(mj, "readout_state"), "readout_state");
    machine.readout_memory =
        matrix_from_json(field(mj, "readout_memory"), "readout_memory");
  } else {
    const json& oj = field(j, "readout");
    readout.bias = vector_from_json(field(oj, "bias"), "bias");
    readout.weights = matrix_from_json(field(oj, "weights"), "weights");
  }
  try {
    return Model::from_parts(spec, hyper, res, std::move(readout), std::move(machine));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("model: ") + e.what());
  }
}

void write_model(const std::filesystem::path& path, const Model& model) {
  write_text_file(path, model_to_json(model).dump(2) + "\n");
}

Model read_model(const std::filesystem::path& path) {
  return model_from_json(read_json_file(path));
}

void write_results_csv(std::ostream& out, const CvReport& report) {
  out << "model,task,fold,rmse,seconds\n";
  for (const auto& f : report.folds)
    out << report.model << ',' << report.task << ',' << f.fold << ','
        << shortest(f.rmse) << ',' << shortest(f.seconds) << '\n';
}

void write_runtimes_csv(std::ostream& out, std::span<const RuntimeRow> rows) {
  out << "length,model,train_mean,train_std,pred_mean,pred_std\n";
  for (const auto& r : rows)
    out << r.length << ',' << r.model << ',' << shortest(r.train_mean) << ','
        << shortest(r.train_std) << ',' << shortest(r.pred_mean) << ','
        << shortest(r.pred_std) << '\n';
}

json summary_to_json(const CvReport& report) {
  json folds = json::array();
  for (const auto& f : report.folds)
    folds.push_back({{"fold", f.fold},
                     {"rmse", f.rmse},
                     {"seconds", f.seconds},
                     {"inner_rmse", f.inner_rmse},
                     {"chosen", hyper_to_json(f.chosen)}});
  return {{"model", report.model}, {"task", report.task}, {"mean", report.mean},
          {"stddev", report.stddev}, {"folds", std::move(folds)}};
}

}  // namespace rmm::io
