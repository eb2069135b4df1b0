// Copyright 2026 The stablenash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STABLENASH_ERRORS_H_
#define STABLENASH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace stablenash {

// Root of every exception the library throws. The CLI maps the two
// families below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something malformed or outside an operation's domain.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Mismatched matrix / vector dimensions.
class ShapeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Argument lies outside the operation's mathematical domain (empty set,
// pure strategy where a mixed one is needed, non-constant-sum game, ...).
class DomainError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Numeric parameter out of its allowed range.
class ParameterError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A documented precondition on a profile or game does not hold.
class PreconditionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A runtime certificate check failed: the input was not what it claimed.
class CertificateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Randomized construction could not succeed on this input.
class DegenerateInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Work would exceed the configured enumeration budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The simplex produced a point that fails its own feasibility re-check.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace stablenash

#endif  // STABLENASH_ERRORS_H_
