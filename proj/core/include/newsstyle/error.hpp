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

#ifndef NEWSSTYLE_ERROR_HPP_
#define NEWSSTYLE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace newsstyle {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid invocation: bad flags, unknown subcommand, out-of-range parameter.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Input data that cannot be used: unreadable files, malformed records,
// violated preconditions on corpus contents.
class DataError : public Error {
 public:
  using Error::Error;
};

// An internal guarantee of an experiment was violated at run time.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// A test-fold document reached vocabulary construction or standardization,
// or a publisher appeared on both sides of a publisher-disjoint split.
class LeakageError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

// Process exit codes used by the command line tools.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitAssertion = 3,
};

}  // namespace newsstyle

#endif  // NEWSSTYLE_ERROR_HPP_
