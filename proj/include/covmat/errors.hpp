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

#ifndef COVMAT_ERRORS_HPP_
#define COVMAT_ERRORS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace covmat {

// Base of every error thrown by the library. The CLI maps each subclass to
// its own exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad labels, a covering that does not cover, negative
// capacities, duplicate blocks.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An exponential scan was requested beyond the configured cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its documented domain, e.g. a zero
// capacity handed to the matroidal approximation operators.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two routes that must agree did not. Carries the first subset (as a raw
// bitmask over the ground set) on which they differ, when there is one.
class VerificationError : public Error {
 public:
  VerificationError(const std::string& what, std::optional<std::uint64_t> witness)
      : Error(what), witness_(witness) {}

  std::optional<std::uint64_t> witness() const { return witness_; }

 private:
  std::optional<std::uint64_t> witness_;
};

}  // namespace covmat

#endif  // COVMAT_ERRORS_HPP_
