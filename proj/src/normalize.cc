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

#include "gridwd/normalize.h"

#include <cmath>
#include <limits>
#include <string>

#include "gridwd/error.h"

namespace gridwd {
namespace {

void check_real_grid(const RealGrid& g, const char* name) {
  if (g.rows == 0 || g.cols == 0 || g.cells.size() != g.rows * g.cols) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("normalize_pair: malformed grid ") + name);
  }
  bool any_positive = false;
  for (double v : g.cells) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kNonFinite,
                  std::string("normalize_pair: non-finite entry in ") + name);
    }
    if (v < 0) {
      throw Error(ErrorKind::kNegativeEntry,
                  std::string("normalize_pair: negative entry in ") + name);
    }
    any_positive = any_positive || v > 0;
  }
  if (!any_positive) {
    throw Error(ErrorKind::kAllZero,
                std::string("normalize_pair: grid ") + name + " is all zero");
  }
}

std::vector<Mass> scale_round(const RealGrid& g, double scale) {
  // Entries above this cannot be held exactly after rounding.
  constexpr double kMaxScaled = 9.0e15;
  std::vector<Mass> out;
  out.reserve(g.cells.size());
  for (double v : g.cells) {
    // nearbyint rounds half-to-even under the default rounding mode.
    const double r = std::nearbyint(v * scale);
    if (r > kMaxScaled) {
      throw Error(ErrorKind::kOverflow,
                  "normalize_pair: scaled entry too large");
    }
    out.push_back(static_cast<Mass>(r));
  }
  return out;
}

Mass sum(const std::vector<Mass>& v) {
  Mass total = 0;
  for (Mass x : v) {
    if (x > std::numeric_limits<Mass>::max() - total) {
      throw Error(ErrorKind::kOverflow, "normalize_pair: total overflows");
    }
    total += x;
  }
  return total;
}

}  // namespace

NormalizedPair normalize_pair(const RealGrid& p, const RealGrid& q,
                              unsigned digits) {
  if (digits > kMaxNormalizeDigits) {
    throw Error(ErrorKind::kInvalidArgument,
                "normalize_pair: digits above " +
                    std::to_string(kMaxNormalizeDigits));
  }
  check_real_grid(p, "p");
  check_real_grid(q, "q");
  if (p.rows != q.rows || p.cols != q.cols) {
    throw Error(ErrorKind::kDimensionMismatch,
                "normalize_pair: dimensions differ");
  }

  Mass scale = 1;
  for (unsigned d = 0; d < digits; ++d) scale *= 10;

  auto ip = scale_round(p, static_cast<double>(scale));
  auto iq = scale_round(q, static_cast<double>(scale));
  const Mass tp = sum(ip);
  const Mass tq = sum(iq);
  if (tp != tq) {
    const Mass residue = tp > tq ? tp - tq : tq - tp;
    const Mass heavier = std::max(tp, tq);
    // residue > 1% of heavier, in integers.
    if (static_cast<__int128>(residue) * 100 > heavier) {
      throw Error(ErrorKind::kResidueTooLarge,
                  "normalize_pair: rounding residue " +
                      std::to_string(residue) + " exceeds 1% of " +
                      std::to_string(heavier));
    }
    auto& lighter = tp < tq ? ip : iq;
    std::size_t largest = 0;
    for (std::size_t i = 1; i < lighter.size(); ++i) {
      if (lighter[i] > lighter[largest]) largest = i;
    }
    lighter[largest] += residue;
  }
  return {GridHistogram(p.rows, p.cols, std::move(ip)),
          GridHistogram(q.rows, q.cols, std::move(iq)), scale};
}

}  // namespace gridwd
