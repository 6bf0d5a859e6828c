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

#ifndef NEWSSTYLE_PARALLEL_HPP_
#define NEWSSTYLE_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace newsstyle {

// Worker count used by parallel_for when none is given. Defaults to the
// hardware concurrency; 0 restores the default.
void set_default_threads(std::size_t threads);
std::size_t default_threads();

// Runs body(i) for every i in [0, n) on up to `threads` workers. Each index
// runs exactly once; callers write results to slot i so the outcome does not
// depend on scheduling. The first exception thrown by any body is rethrown
// after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 0);

}  // namespace newsstyle

#endif  // NEWSSTYLE_PARALLEL_HPP_
