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

#ifndef GRIDWD_QMWD_H_
#define GRIDWD_QMWD_H_

#include "gridwd/grid.h"

namespace gridwd {

// The three directional 1D distances behind QMWD, their estimates and the
// maximum. For an m x n input, the row direction uses divisor n; the rotated
// and transposed directions are n x m grids and use divisor m.
struct QmwdBreakdown {
  Mass wd_row = 0;
  Mass wd_rot = 0;
  Mass wd_transp = 0;
  Mass est_row = 0;
  Mass est_rot = 0;
  Mass est_transp = 0;
  Mass qmwd = 0;

  friend bool operator==(const QmwdBreakdown&,
                         const QmwdBreakdown&) = default;
};

// floor(wd / k) + wd mod k. Throws kInvalidArgument for k == 0 or wd < 0.
Mass directional_estimate(Mass wd, Mass k);

// Errors: kDimensionMismatch, kMassMismatch, kOverflow.
QmwdBreakdown qmwd(const GridHistogram& p, const GridHistogram& q);

}  // namespace gridwd

#endif  // GRIDWD_QMWD_H_
