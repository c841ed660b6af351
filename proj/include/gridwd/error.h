// Copyright 2026 The gridwd Authors
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

#ifndef GRIDWD_ERROR_H_
#define GRIDWD_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridwd {

enum class ErrorKind {
  // Grid text parsing.
  kEmpty,
  kRaggedRows,
  kBadToken,
  // Numerical preconditions.
  kLengthMismatch,
  kMassMismatch,
  kDimensionMismatch,
  kMassTooLarge,
  kOverflow,
  // Real-valued normalization.
  kNegativeEntry,
  kNonFinite,
  kAllZero,
  kResidueTooLarge,
  // Harness.
  kEmptyInput,
  kInvalidArgument,
  kIoFailure,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gridwd

#endif  // GRIDWD_ERROR_H_
