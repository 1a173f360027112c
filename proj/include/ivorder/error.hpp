// Copyright 2026 The ivorder Authors
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

#ifndef IVORDER_ERROR_HPP_
#define IVORDER_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ivorder {

enum class ErrorKind {
  kShape,
  kReflexivity,
  kAntisymmetry,
  kTransitivity,
  kOutOfRange,
  kEmptySubset,
  kNotAnIntervalOrder,
  kSizeMismatch,
  kMalformedInterval,
  kMalformedTree,
  kResourceLimit,
  kFormat,
  kIo,
};

std::string_view to_string(ErrorKind kind);

// Domain error. `witness` carries the 1-based elements that triggered it
// (the offending pair or triple for validation failures), possibly empty.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<int> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

// Raised when a result that should stay inside the class of canonical
// interval orders does not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ivorder

#endif  // IVORDER_ERROR_HPP_
