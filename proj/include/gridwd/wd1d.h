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

#ifndef GRIDWD_WD1D_H_
#define GRIDWD_WD1D_H_

#include "gridwd/grid.h"

namespace gridwd {

struct Wd1dResult {
  Mass distance = 0;

  friend bool operator==(const Wd1dResult&, const Wd1dResult&) = default;
};

// Exact 1D Wasserstein distance with unit spacing between adjacent indices,
// computed as the sum of absolute prefix-sum differences. Linear time.
//
// Requires equal lengths (kLengthMismatch) and equal totals (kMassMismatch).
Wd1dResult wd_1d(const MassVector& a, const MassVector& b);

}  // namespace gridwd

#endif  // GRIDWD_WD1D_H_
