#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rmm/harness.hpp"

namespace rmm::io {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json matrix_to_json(const Eigen::Ref<const Matrix<double>>& m);
Matrix<double> matrix_from_json(const json& j, const char* what);
json vector_to_json(const Eigen::Ref<const Vector<double>>& v);
Vector<double> vector_from_json(const json& j, const char* what);

// Samples are {"task", "n", "L", "X", "Y", "meta"}; X and Y hold one row per
// time step. A dataset is an array of samples.
json sample_to_json(const Sample& s);
Sample sample_from_json(const json& j);

json dataset_to_json(std::span<const Sample> data);
std::vector<Sample> dataset_from_json(const json& j);

void write_dataset(const std::filesystem::path& path, std::span<const Sample> data);
std::vector<Sample> read_dataset(const std::filesystem::path& path);

json model_to_json(const Model& model);
Model model_from_json(const json& j);

void write_model(const std::filesystem::path& path, const Model& model);
Model read_model(const std::filesystem::path& path);

json hyper_to_json(const HyperPoint& h);
HyperPoint hyper_from_json(const json& j);

/// `model,task,fold,rmse,seconds`, one row per fold.
void write_results_csv(std::ostream& out, const CvReport& report);
/// `length,model,train_mean,train_std,pred_mean,pred_std`.
void write_runtimes_csv(std::ostream& out, std::span<const RuntimeRow> rows);
json summary_to_json(const CvReport& report);

/// Reads a whole JSON file; throws ParseError with the path on failure.
json read_json_file(const std::filesystem::path& path);
/// Writes `text` to `path`, throwing std::runtime_error if it cannot.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rmm::io
