// Copyright 2026 The linkwl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <stdexcept>

#include "linkwl/linkpred.hpp"

namespace linkwl {
namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + e^z) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

}  // namespace

double LinearScorer::score(std::span<const double> features) const {
  if (features.size() != weights.size()) {
    throw std::invalid_argument("scorer expects " + std::to_string(weights.size()) +
                                " features, got " + std::to_string(features.size()));
  }
  double z = bias;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (stdev[j] > 0) z += weights[j] * (features[j] - mean[j]) / stdev[j];
  }
  return z;
}

LinearScorer train_scorer(const std::vector<std::vector<double>>& features,
                          std::span<const int> labels, const TrainConfig& config) {
  const std::size_t rows = features.size();
  if (rows != labels.size()) {
    throw std::invalid_argument("got " + std::to_string(rows) + " feature rows for " +
                                std::to_string(labels.size()) + " labels");
  }
  if (rows < 2) throw std::invalid_argument("training needs at least two rows");
  std::size_t positives = 0;
  for (int y : labels) {
    if (y != 0 && y != 1) throw std::invalid_argument("labels must be 0 or 1");
    positives += static_cast<std::size_t>(y);
  }
  if (positives == 0 || positives == rows) throw std::invalid_argument("training needs both classes");
  const std::size_t dim = features.front().size();
  for (const auto& row : features) {
    if (row.size() != dim) throw std::invalid_argument("feature rows differ in length");
    for (double x : row) {
      if (!std::isfinite(x)) throw std::invalid_argument("features must be finite");
    }
  }

  LinearScorer scorer;
  scorer.config = config;
  scorer.weights.assign(dim, 0.0);
  scorer.mean.assign(dim, 0.0);
  scorer.stdev.assign(dim, 0.0);
  const double count = static_cast<double>(rows);
  for (const auto& row : features) {
    for (std::size_t j = 0; j < dim; ++j) scorer.mean[j] += row[j] / count;
  }
  for (const auto& row : features) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double d = row[j] - scorer.mean[j];
      scorer.stdev[j] += d * d / count;
    }
  }
  for (double& s : scorer.stdev) s = std::sqrt(s);

  std::vector<std::vector<double>> x(rows, std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (scorer.stdev[j] > 0) x[i][j] = (features[i][j] - scorer.mean[j]) / scorer.stdev[j];
    }
  }

  std::vector<double> grad(dim);
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    std::fill(grad.begin(), grad.end(), 0.0);
    double grad_bias = 0;
    double loss = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      double z = scorer.bias;
      for (std::size_t j = 0; j < dim; ++j) z += scorer.weights[j] * x[i][j];
      loss += labels[i] == 1 ? softplus(-z) : softplus(z);
      const double err = sigmoid(z) - labels[i];
      for (std::size_t j = 0; j < dim; ++j) grad[j] += err * x[i][j];
      grad_bias += err;
    }
    scorer.loss_history.push_back(loss / count);
    for (std::size_t j = 0; j < dim; ++j) scorer.weights[j] -= config.learning_rate * grad[j] / count;
    scorer.bias -= config.learning_rate * grad_bias / count;
  }
  return scorer;
}

}  // namespace linkwl
