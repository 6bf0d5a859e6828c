/*
 * Copyright (C) 2026 The newsstyle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>

#include "newsstyle/error.hpp"
#include "newsstyle/linear.hpp"

namespace newsstyle {
namespace {

constexpr int kMaxHalvings = 40;

double dot(const std::vector<double>& w, const FeatureVector& x) {
  double sum = 0.0;
  for (std::size_t k = 0; k < x.indices.size(); ++k) sum += w[x.indices[k]] * x.values[k];
  return sum;
}

double objective(const std::vector<double>& w, double b, std::span<const FeatureVector> x,
                 std::span<const int> y, double lambda) {
  double loss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    loss += std::max(0.0, 1.0 - y[i] * (dot(w, x[i]) + b));
  }
  double norm = 0.0;
  for (const double v : w) norm += v * v;
  return 0.5 * lambda * norm + loss / static_cast<double>(x.size());
}

}  // namespace

double LinearModel::margin(const FeatureVector& x) const {
  if (x.dimension != weights.size()) {
    throw DataError("vector dimension " + std::to_string(x.dimension) + " does not match model " +
                    std::to_string(weights.size()));
  }
  return dot(weights, x) + bias;
}

double hinge_objective(const LinearModel& model, std::span<const FeatureVector> x,
                       std::span<const int> y, double lambda) {
  return objective(model.weights, model.bias, x, y, lambda);
}

LinearModel train_linear(std::span<const FeatureVector> x, std::span<const int> y,
                         const LinearConfig& config) {
  if (x.empty() || x.size() != y.size()) throw DataError("train_linear: need one label per vector");
  const std::size_t dim = x.front().dimension;
  bool pos = false;
  bool neg = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].dimension != dim) throw DataError("train_linear: inconsistent vector dimensions");
    if (y[i] == 1) {
      pos = true;
    } else if (y[i] == -1) {
      neg = true;
    } else {
      throw DataError("train_linear: labels must be -1 or +1");
    }
  }
  if (!pos || !neg) throw DataError("train_linear: both classes must be present");
  if (!(config.lambda > 0.0)) throw DataError("train_linear: lambda must be positive");

  LinearModel model;
  model.config = config;
  model.weights.assign(dim, 0.0);
  const double n = static_cast<double>(x.size());
  double current = objective(model.weights, model.bias, x, y, config.lambda);

  std::vector<double> grad(dim);
  std::vector<double> trial_w(dim);
  double step = 1.0;
  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t j = 0; j < dim; ++j) grad[j] = config.lambda * model.weights[j];
    double grad_b = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (y[i] * (dot(model.weights, x[i]) + model.bias) < 1.0) {
        const double coef = -y[i] / n;
        for (std::size_t k = 0; k < x[i].indices.size(); ++k) {
          grad[x[i].indices[k]] += coef * x[i].values[k];
        }
        grad_b += coef;
      }
    }

    bool accepted = false;
    for (int attempt = 0; attempt <= kMaxHalvings; ++attempt) {
      for (std::size_t j = 0; j < dim; ++j) trial_w[j] = model.weights[j] - step * grad[j];
      const double trial_b = model.bias - step * grad_b;
      const double value = objective(trial_w, trial_b, x, y, config.lambda);
      if (value < current) {
        model.weights.swap(trial_w);
        model.bias = trial_b;
        current = value;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    model.loss_history.push_back(current);
    step *= 1.5;
  }
  return model;
}

}  // namespace newsstyle
