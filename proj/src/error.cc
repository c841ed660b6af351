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

#include "gridwd/error.h"

namespace gridwd {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmpty: return "Empty";
    case ErrorKind::kRaggedRows: return "RaggedRows";
    case ErrorKind::kBadToken: return "BadToken";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kMassMismatch: return "MassMismatch";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kMassTooLarge: return "MassTooLarge";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kNegativeEntry: return "NegativeEntry";
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kAllZero: return "AllZero";
    case ErrorKind::kResidueTooLarge: return "ResidueTooLarge";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kIoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace gridwd
