# Copyright (C) 2026 The newsstyle Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates fixtures/linear_gaussian_oracle.json: two 2-D Gaussian
classes, 200 training and 200 test points, and the exact minimizer of
lambda/2 |w|^2 + mean hinge loss (bias unregularized) from cvxpy.
scikit-learn's LinearSVC(loss='hinge', C=1/(lambda n)) lands on the same
solution to four digits."""
import json
from pathlib import Path

import cvxpy as cp
import numpy as np

rng = np.random.default_rng(2026)


def sample(n):
    y = np.array([1] * (n // 2) + [-1] * (n // 2))
    x = rng.normal(0, 1, (n, 2)) + np.where(y[:, None] > 0, [1.0, 0.6], [-1.0, -0.6])
    return x, y


xtr, ytr = sample(200)
xte, yte = sample(200)
lam = 1e-2
w = cp.Variable(2)
b = cp.Variable()
objective = lam / 2 * cp.sum_squares(w) + cp.sum(cp.pos(1 - cp.multiply(ytr, xtr @ w + b))) / len(ytr)
cp.Problem(cp.Minimize(objective)).solve()
pred = np.where(xte @ w.value + b.value >= 0, 1, -1)
out = {
    'lambda': lam,
    'reference': 'exact convex solve of lambda/2 |w|^2 + mean hinge, bias unregularized',
    'reference_test_accuracy': float((pred == yte).mean()),
    'reference_weights': w.value.tolist(),
    'reference_bias': float(b.value),
    'reference_objective': float(objective.value),
    'train': {'x': xtr.tolist(), 'y': ytr.tolist()},
    'test': {'x': xte.tolist(), 'y': yte.tolist()},
}
(Path(__file__).resolve().parent.parent / 'fixtures/linear_gaussian_oracle.json').write_text(json.dumps(out))
