// Copyright 2026 The GORS Authors
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

#ifndef GORS_ERRORS_H_
#define GORS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gors {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data is malformed or violates a domain invariant (bad strength,
// unknown id, inconsistent dimensions in a file, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that an operation cannot accept: negative budget,
// infeasible selection handed to the SDP check, instance too large for
// enumeration, and so on.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gors

#endif  // GORS_ERRORS_H_
