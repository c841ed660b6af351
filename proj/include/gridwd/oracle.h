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

#ifndef GRIDWD_ORACLE_H_
#define GRIDWD_ORACLE_H_

// Brute-force reference solvers. Both expand every unit of mass into a point
// and solve the resulting matching problem directly; they share no code with
// the production solvers and exist to cross-check them.

#include "gridwd/grid.h"
#include "gridwd/wd1d.h"

namespace gridwd {

inline constexpr Mass kWd1dOracleMaxMass = 64;
inline constexpr Mass kMwdOracleMaxMass = 12;

// Sorted in-order pairing of unit points. kMassTooLarge above
// kWd1dOracleMaxMass.
Wd1dResult wd_1d_oracle(const MassVector& a, const MassVector& b);

// Exact minimum-cost assignment between unit points under Manhattan cost, by
// dynamic programming over subsets of destination points. kMassTooLarge above
// kMwdOracleMaxMass.
Mass mwd_oracle_assignment(const GridHistogram& p, const GridHistogram& q);

}  // namespace gridwd

#endif  // GRIDWD_ORACLE_H_
