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

#ifndef NEWSSTYLE_LINEAR_HPP_
#define NEWSSTYLE_LINEAR_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "newsstyle/features.hpp"

namespace newsstyle {

struct LinearConfig {
  // L2 strength in  lambda/2 |w|^2 + mean hinge loss.
  double lambda = 1e-4;
  std::size_t epochs = 400;
  // Recorded for provenance; full-batch training does not consume randomness.
  std::uint64_t seed = 1;
};

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  LinearConfig config;
  // Objective after every accepted epoch; non-increasing.
  std::vector<double> loss_history;

  // w.x + b. Throws DataError on a dimension mismatch.
  double margin(const FeatureVector& x) const;
  // +1 when margin >= 0, else -1.
  int predict(const FeatureVector& x) const { return margin(x) >= 0.0 ? 1 : -1; }
};

// Regularized hinge-loss objective for labels in {-1, +1}.
double hinge_objective(const LinearModel& model, std::span<const FeatureVector> x,
                       std::span<const int> y, double lambda);

// Full-batch subgradient descent with a backtracking step size: a step is
// taken only when it lowers the objective, so the loss history never rises.
// Training stops after `epochs` steps or when no step size down to 2^-40 of
// the current one improves. Throws DataError for single-class input, labels
// outside {-1, +1} or inconsistent dimensions.
LinearModel train_linear(std::span<const FeatureVector> x, std::span<const int> y,
                         const LinearConfig& config = {});

}  // namespace newsstyle

#endif  // NEWSSTYLE_LINEAR_HPP_
