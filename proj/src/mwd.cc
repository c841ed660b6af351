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

#include "gridwd/mwd.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <span>
#include <utility>
#include <string>
#include <vector>

#include "gridwd/error.h"

namespace gridwd {
namespace {

constexpr Mass kInf = std::numeric_limits<Mass>::max() / 4;

struct Terminal {
  CellIndex cell;
  std::size_t flat;  // row-major index
  Mass amount;
};

// Transportation problem between surplus cells (sources) and deficit cells
// (sinks) on the complete bipartite graph. Successive shortest paths: every
// round runs Dijkstra on reduced costs from all sources with remaining supply
// and augments along the path to the nearest sink with remaining demand.
// Residual backward edges exist wherever flow > 0.
template <typename CostFn>
class TransportSolver {
 public:
  TransportSolver(std::vector<Terminal> sources, std::vector<Terminal> sinks,
                  CostFn cost)
      : sources_(std::move(sources)),
        sinks_(std::move(sinks)),
        cost_(cost),
        num_src_(sources_.size()),
        num_dst_(sinks_.size()),
        flow_(num_src_ * num_dst_, 0),
        potential_(num_src_ + num_dst_, 0),
        dist_(num_src_ + num_dst_),
        parent_(num_src_ + num_dst_),
        done_(num_src_ + num_dst_) {
    supply_.reserve(num_src_);
    demand_.reserve(num_dst_);
    for (const auto& s : sources_) supply_.push_back(s.amount);
    for (const auto& t : sinks_) demand_.push_back(t.amount);
  }

  void solve() {
    Mass remaining = 0;
    for (Mass s : supply_) remaining += s;
    while (remaining > 0) remaining -= augment();
  }

  void collect(TransportPlan& plan) const {
    for (std::size_t s = 0; s < num_src_; ++s) {
      for (std::size_t t = 0; t < num_dst_; ++t) {
        const Mass f = flow_[s * num_dst_ + t];
        if (f > 0) plan.moves.push_back({sources_[s].cell, sinks_[t].cell, f});
      }
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  Mass arc_cost(std::size_t s, std::size_t t) const {
    return cost_(sources_[s].flat, sinks_[t].flat);
  }

  // Node ids: sources are [0, num_src_), sinks are num_src_ + t.
  Mass augment() {
    const std::size_t nodes = num_src_ + num_dst_;
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(parent_.begin(), parent_.end(), kNone);
    std::fill(done_.begin(), done_.end(), false);
    for (std::size_t s = 0; s < num_src_; ++s) {
      if (supply_[s] > 0) dist_[s] = 0;
    }

    std::size_t target = kNone;
    Mass reached = kInf;
    while (true) {
      std::size_t u = kNone;
      Mass best = kInf;
      for (std::size_t v = 0; v < nodes; ++v) {
        if (!done_[v] && dist_[v] < best) {
          best = dist_[v];
          u = v;
        }
      }
      if (u == kNone) break;
      done_[u] = true;
      if (u < num_src_) {
        for (std::size_t t = 0; t < num_dst_; ++t) {
          const std::size_t v = num_src_ + t;
          if (done_[v]) continue;
          const Mass nd =
              best + arc_cost(u, t) + potential_[u] - potential_[v];
          if (nd < dist_[v]) {
            dist_[v] = nd;
            parent_[v] = u;
          }
        }
      } else {
        const std::size_t t = u - num_src_;
        if (demand_[t] > 0) {
          target = u;
          reached = best;
          break;
        }
        for (std::size_t s = 0; s < num_src_; ++s) {
          if (done_[s] || flow_[s * num_dst_ + t] == 0) continue;
          const Mass nd =
              best - arc_cost(s, t) + potential_[u] - potential_[s];
          if (nd < dist_[s]) {
            dist_[s] = nd;
            parent_[s] = u;
          }
        }
      }
    }
    if (target == kNone) {
      throw Error(ErrorKind::kInvalidArgument,
                  "mwd_exact: no augmenting path (unbalanced instance)");
    }

    for (std::size_t v = 0; v < nodes; ++v) {
      potential_[v] += std::min(dist_[v], reached);
    }

    // Walk back to the originating source, finding the bottleneck.
    Mass amount = demand_[target - num_src_];
    std::size_t v = target;
    while (parent_[v] != kNone) {
      const std::size_t u = parent_[v];
      if (u >= num_src_) {
        // Backward arc sink u -> source v cancels flow on (v, u).
        amount = std::min(amount, flow_[v * num_dst_ + (u - num_src_)]);
      }
      v = u;
    }
    amount = std::min(amount, supply_[v]);

    supply_[v] -= amount;
    demand_[target - num_src_] -= amount;
    v = target;
    while (parent_[v] != kNone) {
      const std::size_t u = parent_[v];
      if (u < num_src_) {
        flow_[u * num_dst_ + (v - num_src_)] += amount;
      } else {
        flow_[v * num_dst_ + (u - num_src_)] -= amount;
      }
      v = u;
    }
    return amount;
  }

  std::vector<Terminal> sources_;
  std::vector<Terminal> sinks_;
  CostFn cost_;
  std::size_t num_src_;
  std::size_t num_dst_;
  std::vector<Mass> supply_;
  std::vector<Mass> demand_;
  std::vector<Mass> flow_;
  std::vector<Mass> potential_;
  std::vector<Mass> dist_;
  std::vector<std::size_t> parent_;
  std::vector<bool> done_;
};

// Min-cost flow on the grid graph: arcs between 4-neighbours in both
// directions, unit cost, unbounded capacity. flow_[4 * u + d] is the flow on
// the arc leaving u in direction d.
class GridFlowSolver {
 public:
  GridFlowSolver(std::size_t rows, std::size_t cols, std::vector<Mass> supply,
                 std::vector<Mass> demand)
      : rows_(rows),
        cols_(cols),
        nodes_(rows * cols),
        supply_(std::move(supply)),
        demand_(std::move(demand)),
        flow_(4 * nodes_, 0),
        potential_(nodes_, 0),
        dist_(nodes_),
        parent_(nodes_),
        done_(nodes_) {}

  void solve() {
    Mass remaining = 0;
    for (Mass s : supply_) remaining += s;
    while (remaining > 0) remaining -= augment();
  }

  Mass cost() const {
    Mass total = 0;
    for (Mass f : flow_) total += f;
    return total;
  }

  // Splits the flow into source-to-sink paths. Optimal flow carries no
  // cycles, so each walk along positive arcs ends at a sink.
  void decompose(std::span<const Mass> supply, std::span<const Mass> demand,
                 TransportPlan& plan) {
    std::vector<Mass> out_left(supply.begin(), supply.end());
    std::vector<Mass> in_left(demand.begin(), demand.end());
    std::map<std::pair<std::size_t, std::size_t>, Mass> moves;
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < nodes_; ++s) {
      while (out_left[s] > 0) {
        path.clear();
        Mass amount = out_left[s];
        std::size_t u = s;
        while (in_left[u] == 0) {
          std::size_t d = 0;
          while (d < 4 && flow_[4 * u + d] == 0) ++d;
          if (d == 4) {
            throw Error(ErrorKind::kInvalidArgument,
                        "mwd_exact: flow decomposition stalled");
          }
          path.push_back(4 * u + d);
          amount = std::min(amount, flow_[4 * u + d]);
          u = neighbour(u, d);
        }
        amount = std::min(amount, in_left[u]);
        for (std::size_t arc : path) flow_[arc] -= amount;
        out_left[s] -= amount;
        in_left[u] -= amount;
        moves[{s, u}] += amount;
      }
    }
    for (const auto& [ends, amount] : moves) {
      plan.moves.push_back({{ends.first / cols_, ends.first % cols_},
                            {ends.second / cols_, ends.second % cols_},
                            amount});
    }
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  // Directions: 0 up, 1 down, 2 left, 3 right; d ^ 1 is the reverse.
  bool has_neighbour(std::size_t u, std::size_t d) const {
    switch (d) {
      case 0: return u >= cols_;
      case 1: return u + cols_ < nodes_;
      case 2: return u % cols_ != 0;
      default: return u % cols_ + 1 < cols_;
    }
  }

  std::size_t neighbour(std::size_t u, std::size_t d) const {
    switch (d) {
      case 0: return u - cols_;
      case 1: return u + cols_;
      case 2: return u - 1;
      default: return u + 1;
    }
  }

  struct Step {
    std::size_t from = kNone;
    std::size_t arc = 0;  // flow_ index used
    bool forward = true;
  };

  Mass augment() {
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(done_.begin(), done_.end(), false);
    using Entry = std::pair<Mass, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (std::size_t u = 0; u < nodes_; ++u) {
      parent_[u] = {};
      if (supply_[u] > 0) {
        dist_[u] = 0;
        heap.push({0, u});
      }
    }

    std::size_t target = kNone;
    Mass reached = kInf;
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (done_[u] || du != dist_[u]) continue;
      done_[u] = true;
      if (demand_[u] > 0) {
        target = u;
        reached = du;
        break;
      }
      for (std::size_t d = 0; d < 4; ++d) {
        if (!has_neighbour(u, d)) continue;
        const std::size_t v = neighbour(u, d);
        if (done_[v]) continue;
        const Mass base = du + potential_[u] - potential_[v];
        // A residual reverse arc (cost -1) beats the forward arc (cost +1).
        const std::size_t back = 4 * v + (d ^ 1);
        const bool use_back = flow_[back] > 0;
        const Mass nd = base + (use_back ? -1 : 1);
        if (nd < dist_[v]) {
          dist_[v] = nd;
          parent_[v] = {u, use_back ? back : 4 * u + d, !use_back};
          heap.push({nd, v});
        }
      }
    }
    if (target == kNone) {
      throw Error(ErrorKind::kInvalidArgument,
                  "mwd_exact: no augmenting path (unbalanced instance)");
    }
    for (std::size_t v = 0; v < nodes_; ++v) {
      potential_[v] += std::min(dist_[v], reached);
    }

    Mass amount = demand_[target];
    std::size_t v = target;
    while (parent_[v].from != kNone) {
      if (!parent_[v].forward) amount = std::min(amount, flow_[parent_[v].arc]);
      v = parent_[v].from;
    }
    amount = std::min(amount, supply_[v]);
    supply_[v] -= amount;
    demand_[target] -= amount;
    for (v = target; parent_[v].from != kNone; v = parent_[v].from) {
      flow_[parent_[v].arc] += parent_[v].forward ? amount : -amount;
    }
    return amount;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::size_t nodes_;
  std::vector<Mass> supply_;
  std::vector<Mass> demand_;
  std::vector<Mass> flow_;
  std::vector<Mass> potential_;
  std::vector<Mass> dist_;
  std::vector<Step> parent_;
  std::vector<bool> done_;
};

template <typename CostFn>
void solve_residual(std::vector<Terminal> sources, std::vector<Terminal> sinks,
                    CostFn cost, TransportPlan& plan) {
  TransportSolver<CostFn> solver(std::move(sources), std::move(sinks), cost);
  solver.solve();
  solver.collect(plan);
}

// The literal cost tensor: cost[(i*n + j) * cells + (k*n + l)] = |i-k| + |j-l|.
std::vector<Mass> dense_cost_tensor(std::size_t m, std::size_t n) {
  const std::size_t cells = m * n;
  std::vector<Mass> cost(cells * cells);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          cost[(i * n + j) * cells + (k * n + l)] =
              manhattan_cost({i, j}, {k, l});
        }
      }
    }
  }
  return cost;
}

}  // namespace

Mass plan_cost(const TransportPlan& plan) {
  Mass total = 0;
  for (const auto& mv : plan.moves) {
    total += mv.amount * manhattan_cost(mv.src, mv.dst);
  }
  return total;
}

MwdResult mwd_exact(const GridHistogram& p, const GridHistogram& q,
                    const MwdOptions& options) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "mwd_exact: dimensions " + std::to_string(p.rows()) + "x" +
                    std::to_string(p.cols()) + " and " +
                    std::to_string(q.rows()) + "x" + std::to_string(q.cols()) +
                    " differ");
  }
  const Mass total = total_mass(p);
  if (total != total_mass(q)) {
    throw Error(ErrorKind::kMassMismatch, "mwd_exact: total masses differ");
  }
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();
  check_cost_bound(total, m + n);
  if (options.method == MwdMethod::kBipartiteDenseCost &&
      m * n > kDenseCostMaxCells) {
    throw Error(ErrorKind::kInvalidArgument,
                "mwd_exact: dense cost tensor limited to " +
                    std::to_string(kDenseCostMaxCells) + " cells");
  }

  MwdResult result;
  if (total == 0) return result;

  // Common mass stays put at zero cost.
  std::vector<Mass> surplus(m * n, 0);
  std::vector<Mass> deficit(m * n, 0);
  for (std::size_t c = 0; c < m * n; ++c) {
    const Mass a = p.cells()[c];
    const Mass b = q.cells()[c];
    const Mass common = std::min(a, b);
    if (common > 0) {
      result.plan.moves.push_back({{c / n, c % n}, {c / n, c % n}, common});
    }
    surplus[c] = a - common;
    deficit[c] = b - common;
  }

  if (options.method == MwdMethod::kGridFlow) {
    GridFlowSolver solver(m, n, surplus, deficit);
    solver.solve();
    result.distance = solver.cost();
    solver.decompose(surplus, deficit, result.plan);
    return result;
  }

  std::vector<Terminal> sources;
  std::vector<Terminal> sinks;
  for (std::size_t c = 0; c < m * n; ++c) {
    if (surplus[c] > 0) sources.push_back({{c / n, c % n}, c, surplus[c]});
    if (deficit[c] > 0) sinks.push_back({{c / n, c % n}, c, deficit[c]});
  }
  if (options.method == MwdMethod::kBipartiteDenseCost) {
    const std::vector<Mass> tensor = dense_cost_tensor(m, n);
    const std::size_t cells = m * n;
    solve_residual(std::move(sources), std::move(sinks),
                   [&tensor, cells](std::size_t a, std::size_t b) {
                     return tensor[a * cells + b];
                   },
                   result.plan);
  } else {
    solve_residual(std::move(sources), std::move(sinks),
                   [n](std::size_t a, std::size_t b) {
                     return manhattan_cost({a / n, a % n}, {b / n, b % n});
                   },
                   result.plan);
  }
  result.distance = plan_cost(result.plan);
  return result;
}

}  // namespace gridwd
