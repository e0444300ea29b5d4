#include "mtvrp/adapters.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace mtvrp {

namespace {

void check_new_labels(const ProjectionWeights& w, const std::vector<std::string>& labels) {
  std::set<std::string> seen(w.attribute_names.begin(), w.attribute_names.end());
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw LabelCollision("attribute label already present: " + label);
  }
}

}  // namespace

ProjectionWeights::ProjectionWeights(std::vector<std::vector<double>> rows_in, std::vector<std::string> names,
                                     std::optional<std::vector<double>> bias_in)
    : rows(rows_in.size()),
      cols(rows_in.empty() ? 0 : rows_in.front().size()),
      bias(std::move(bias_in)),
      attribute_names(std::move(names)) {
  for (const auto& r : rows_in) {
    if (r.size() != cols) throw ShapeError("ragged weight rows");
    matrix.insert(matrix.end(), r.begin(), r.end());
  }
  validate();
}

void ProjectionWeights::validate() const {
  if (cols < 1) throw ShapeError("latent dimension must be >= 1");
  if (matrix.size() != rows * cols) throw ShapeError("matrix size does not match shape");
  if (attribute_names.size() != rows) throw ShapeError("one attribute name per row required");
  if (bias && bias->size() != cols) throw ShapeError("bias length must equal latent dimension");
  std::set<std::string> unique(attribute_names.begin(), attribute_names.end());
  if (unique.size() != attribute_names.size()) throw LabelCollision("duplicate attribute names");
}

ProjectionWeights eal_augment(const ProjectionWeights& weights, const std::vector<std::string>& new_attributes) {
  weights.validate();
  check_new_labels(weights, new_attributes);
  ProjectionWeights out = weights;
  out.rows += new_attributes.size();
  out.matrix.resize(out.rows * out.cols, 0.0);
  out.attribute_names.insert(out.attribute_names.end(), new_attributes.begin(), new_attributes.end());
  return out;
}

ProjectionWeights al_reinit(const ProjectionWeights& weights, const std::vector<std::string>& new_attributes,
                            Rng& rng) {
  ProjectionWeights out = eal_augment(weights, new_attributes);
  const double bound = 1.0 / std::sqrt(static_cast<double>(out.cols));
  for (auto& v : out.matrix) v = rng.uniform(-bound, bound);
  return out;
}

std::vector<double> project(const ProjectionWeights& weights, std::span<const double> x) {
  if (x.size() != weights.rows) throw ShapeError("input length does not match attribute count");
  std::vector<double> out = weights.bias.value_or(std::vector<double>(weights.cols, 0.0));
  for (std::size_t r = 0; r < weights.rows; ++r) {
    const double v = std::isinf(x[r]) ? 0.0 : x[r];
    for (std::size_t c = 0; c < weights.cols; ++c) out[c] += v * weights.at(r, c);
  }
  return out;
}

std::string weights_to_json(const ProjectionWeights& weights) {
  weights.validate();
  nlohmann::json j;
  j["shape"] = {weights.rows, weights.cols};
  j["attributes"] = weights.attribute_names;
  j["values"] = weights.matrix;
  if (weights.bias) j["bias"] = *weights.bias;
  return j.dump();
}

ProjectionWeights weights_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ProjectionWeights w;
  w.rows = j.at("shape").at(0).get<std::size_t>();
  w.cols = j.at("shape").at(1).get<std::size_t>();
  w.attribute_names = j.at("attributes").get<std::vector<std::string>>();
  w.matrix = j.at("values").get<std::vector<double>>();
  if (j.contains("bias")) w.bias = j.at("bias").get<std::vector<double>>();
  w.validate();
  return w;
}

}  // namespace mtvrp
