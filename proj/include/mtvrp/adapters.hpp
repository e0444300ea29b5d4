#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtvrp/rng.hpp"

namespace mtvrp {

class LabelCollision : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Linear projection from k attributes to a d-dimensional latent. Row i of
// the row-major matrix belongs to attribute_names[i].
struct ProjectionWeights {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> matrix;
  std::optional<std::vector<double>> bias;
  std::vector<std::string> attribute_names;

  ProjectionWeights() = default;
  ProjectionWeights(std::vector<std::vector<double>> rows_in, std::vector<std::string> names,
                    std::optional<std::vector<double>> bias_in = std::nullopt);

  double at(std::size_t r, std::size_t c) const { return matrix[r * cols + c]; }
  void validate() const;

  friend bool operator==(const ProjectionWeights&, const ProjectionWeights&) = default;
};

// Appends one all-zero row per new attribute; existing rows and bias are
// untouched, so outputs do not depend on the new inputs until trained.
ProjectionWeights eal_augment(const ProjectionWeights& weights, const std::vector<std::string>& new_attributes);

// Fresh (k + l) x d matrix, every entry uniform in [-1/sqrt(d), 1/sqrt(d)].
ProjectionWeights al_reinit(const ProjectionWeights& weights, const std::vector<std::string>& new_attributes,
                            Rng& rng);

// x^T W (+ bias). Infinite inputs are padded to 0 first.
std::vector<double> project(const ProjectionWeights& weights, std::span<const double> x);

// {"shape": [k, d], "attributes": [...], "values": [row-major], "bias": [...]}.
std::string weights_to_json(const ProjectionWeights& weights);
ProjectionWeights weights_from_json(const std::string& text);

}  // namespace mtvrp
