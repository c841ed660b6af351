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

#include "gridwd/oracle.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "gridwd/error.h"

namespace gridwd {
namespace {

std::vector<std::int64_t> unit_points(std::span<const Mass> values) {
  std::vector<std::int64_t> points;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (Mass u = 0; u < values[i]; ++u) {
      points.push_back(static_cast<std::int64_t>(i));
    }
  }
  return points;
}

struct Point2 {
  std::int64_t row;
  std::int64_t col;
};

std::vector<Point2> unit_points(const GridHistogram& g) {
  std::vector<Point2> points;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      for (Mass u = 0; u < g.at(i, j); ++u) {
        points.push_back({static_cast<std::int64_t>(i),
                          static_cast<std::int64_t>(j)});
      }
    }
  }
  return points;
}

}  // namespace

Wd1dResult wd_1d_oracle(const MassVector& a, const MassVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kLengthMismatch, "wd_1d_oracle: lengths differ");
  }
  const Mass total = a.total();
  if (total != b.total()) {
    throw Error(ErrorKind::kMassMismatch, "wd_1d_oracle: masses differ");
  }
  if (total > kWd1dOracleMaxMass) {
    throw Error(ErrorKind::kMassTooLarge,
                "wd_1d_oracle: mass " + std::to_string(total) + " above " +
                    std::to_string(kWd1dOracleMaxMass));
  }
  auto pa = unit_points(a.values());
  auto pb = unit_points(b.values());
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  Mass cost = 0;
  for (std::size_t k = 0; k < pa.size(); ++k) cost += std::llabs(pa[k] - pb[k]);
  return {cost};
}

Mass mwd_oracle_assignment(const GridHistogram& p, const GridHistogram& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "mwd_oracle_assignment: dimensions differ");
  }
  const Mass total = total_mass(p);
  if (total != total_mass(q)) {
    throw Error(ErrorKind::kMassMismatch,
                "mwd_oracle_assignment: masses differ");
  }
  if (total > kMwdOracleMaxMass) {
    throw Error(ErrorKind::kMassTooLarge,
                "mwd_oracle_assignment: mass " + std::to_string(total) +
                    " above " + std::to_string(kMwdOracleMaxMass));
  }
  const auto src = unit_points(p);
  const auto dst = unit_points(q);
  const std::size_t k = src.size();

  // best[mask] = cheapest matching of the first popcount(mask) sources onto
  // the destination set mask.
  constexpr Mass kInf = std::numeric_limits<Mass>::max();
  std::vector<Mass> best(std::size_t{1} << k, kInf);
  best[0] = 0;
  for (std::size_t mask = 0; mask < best.size(); ++mask) {
    if (best[mask] == kInf) continue;
    const auto next = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (next == k) continue;
    for (std::size_t t = 0; t < k; ++t) {
      if (mask & (std::size_t{1} << t)) continue;
      const Mass c = std::llabs(src[next].row - dst[t].row) +
                     std::llabs(src[next].col - dst[t].col);
      Mass& slot = best[mask | (std::size_t{1} << t)];
      slot = std::min(slot, best[mask] + c);
    }
  }
  return best.back();
}

}  // namespace gridwd
