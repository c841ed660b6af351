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

#ifndef GRIDWD_MWD_H_
#define GRIDWD_MWD_H_

#include <vector>

#include "gridwd/grid.h"

namespace gridwd {

struct Move {
  CellIndex src;
  CellIndex dst;
  Mass amount = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

// Sparse transport plan. Amounts are strictly positive; mass that stays in
// place appears as a move with src == dst.
struct TransportPlan {
  std::vector<Move> moves;
};

struct MwdResult {
  Mass distance = 0;
  TransportPlan plan;
};

enum class MwdMethod {
  // Uncapacitated min-cost flow on the 4-neighbour grid graph with unit edge
  // costs; grid shortest paths are Manhattan distances. The plan is recovered
  // by decomposing the optimal flow into source-to-sink paths.
  kGridFlow,
  // Transportation problem on the complete bipartite graph between surplus
  // and deficit cells, costs evaluated on the fly.
  kBipartite,
  // As kBipartite, but reading costs from the full (rows*cols)^2 tensor.
  // Only accepted up to kDenseCostMaxCells cells.
  kBipartiteDenseCost,
};

struct MwdOptions {
  MwdMethod method = MwdMethod::kGridFlow;
};

// Largest rows*cols accepted by kBipartiteDenseCost.
inline constexpr std::size_t kDenseCostMaxCells = 2048;

constexpr Mass manhattan_cost(CellIndex src, CellIndex dst) {
  auto diff = [](std::size_t x, std::size_t y) {
    return static_cast<Mass>(x > y ? x - y : y - x);
  };
  return diff(src.row, dst.row) + diff(src.col, dst.col);
}

// Exact Manhattan Wasserstein distance between equal-mass grids, with an
// optimal plan.
//
// Common mass is cancelled cellwise first. Every method solves the remaining
// problem by successive shortest augmenting paths with node potentials in
// integer arithmetic, so the distance is the exact LP optimum; the methods
// differ only in the network they search.
//
// Errors: kDimensionMismatch, kMassMismatch, kOverflow, and kInvalidArgument
// when the dense tensor is requested above kDenseCostMaxCells. Zero total
// mass yields distance 0 and an empty plan.
MwdResult mwd_exact(const GridHistogram& p, const GridHistogram& q,
                    const MwdOptions& options = {});

// Sum of amount * manhattan_cost over the plan.
Mass plan_cost(const TransportPlan& plan);

}  // namespace gridwd

#endif  // GRIDWD_MWD_H_
