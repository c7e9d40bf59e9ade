// Copyright 2026 The Authors.
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

#ifndef CYCLOMAT_ERRORS_H_
#define CYCLOMAT_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cyclomat {

// Base for every error raised by the library. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input exceeds a hard size limit (ground set, basis count, search cap, ...).
class SizeCapError : public Error {
 public:
  using Error::Error;
};

// Arguments live on different ground sets.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed construction input (bad basis family, non-prime modulus, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclomat

#endif  // CYCLOMAT_ERRORS_H_
