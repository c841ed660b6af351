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

#include "gridwd/wd1d.h"

#include <string>

#include "gridwd/error.h"

namespace gridwd {

Wd1dResult wd_1d(const MassVector& a, const MassVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                "wd_1d: lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()) + " differ");
  }
  const Mass total = a.total();
  if (total != b.total()) {
    throw Error(ErrorKind::kMassMismatch, "wd_1d: total masses differ");
  }
  if (a.size() > 1) check_cost_bound(total, a.size() - 1);

  // Each |prefix difference| is bounded by total, and the sum by
  // total * (len - 1), so no intermediate overflows.
  Mass balance = 0;
  Mass distance = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    balance += a[i] - b[i];
    distance += balance < 0 ? -balance : balance;
  }
  return {distance};
}

}  // namespace gridwd
