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

#ifndef NEWSSTYLE_CLI_HPP_
#define NEWSSTYLE_CLI_HPP_

#include <iosfwd>

namespace newsstyle {

// Runs the newsstyle command line. Returns one of the ExitCode values and
// never throws.
int cli_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace newsstyle

#endif  // NEWSSTYLE_CLI_HPP_
