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

#ifndef GRIDWD_NORMALIZE_H_
#define GRIDWD_NORMALIZE_H_

#include <cstddef>
#include <vector>

#include "gridwd/grid.h"

namespace gridwd {

struct RealGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> cells;  // row-major
};

struct NormalizedPair {
  GridHistogram p;
  GridHistogram q;
  Mass scale;
};

// Largest accepted number of decimal digits.
inline constexpr unsigned kMaxNormalizeDigits = 12;

// Converts a pair of real-valued grids to equal-mass integer grids.
//
// Each entry is multiplied by 10^digits and rounded half-to-even. If the
// rounded totals differ, the difference is added to the largest cell of the
// lighter grid (first such cell in row-major order). A difference above 1% of
// the heavier scaled total is rejected with kResidueTooLarge: it means digits
// is too small or the inputs do not carry equal mass.
//
// Errors: kDimensionMismatch, kNegativeEntry, kNonFinite, kAllZero,
// kResidueTooLarge, kInvalidArgument (digits > kMaxNormalizeDigits or
// malformed RealGrid), kOverflow.
NormalizedPair normalize_pair(const RealGrid& p, const RealGrid& q,
                              unsigned digits);

}  // namespace gridwd

#endif  // GRIDWD_NORMALIZE_H_
