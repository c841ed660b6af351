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

#include "gridwd/qmwd.h"

#include <algorithm>

#include "gridwd/error.h"
#include "gridwd/wd1d.h"

namespace gridwd {

Mass directional_estimate(Mass wd, Mass k) {
  if (k <= 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "directional_estimate: divisor must be positive");
  }
  if (wd < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "directional_estimate: distance must be nonnegative");
  }
  return wd / k + wd % k;
}

QmwdBreakdown qmwd(const GridHistogram& p, const GridHistogram& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "qmwd: dimensions differ");
  }
  const Mass total = total_mass(p);
  if (total != total_mass(q)) {
    throw Error(ErrorKind::kMassMismatch, "qmwd: total masses differ");
  }
  // Vectorized distances can span rows * cols - 1 steps.
  check_cost_bound(total, p.size());

  const auto m = static_cast<Mass>(p.rows());
  const auto n = static_cast<Mass>(p.cols());

  QmwdBreakdown b;
  b.wd_row = wd_1d(vec_row_major(p), vec_row_major(q)).distance;
  b.wd_rot =
      wd_1d(vec_row_major(rotate90(p)), vec_row_major(rotate90(q))).distance;
  b.wd_transp =
      wd_1d(vec_row_major(transpose(p)), vec_row_major(transpose(q))).distance;
  b.est_row = directional_estimate(b.wd_row, n);
  b.est_rot = directional_estimate(b.wd_rot, m);
  b.est_transp = directional_estimate(b.wd_transp, m);
  b.qmwd = std::max({b.est_row, b.est_rot, b.est_transp});
  return b;
}

}  // namespace gridwd
