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

#include <map>

#include <gtest/gtest.h>

#include "generators.h"
#include "gridwd/error.h"
#include "gridwd/oracle.h"
#include "gridwd/wd1d.h"

namespace gridwd {
namespace {

using testing::Gen;

GridHistogram G(std::size_t m, std::size_t n, std::vector<Mass> cells) {
  return GridHistogram(m, n, std::move(cells));
}

GridHistogram unit_at(std::size_t m, std::size_t n, CellIndex c) {
  std::vector<Mass> v(m * n, 0);
  v[c.row * n + c.col] = 1;
  return G(m, n, std::move(v));
}

// Checks both marginals and the reported cost against the plan.
void expect_valid_plan(const GridHistogram& p, const GridHistogram& q,
                       const MwdResult& r) {
  std::vector<Mass> out(p.size(), 0);
  std::vector<Mass> in(q.size(), 0);
  for (const auto& mv : r.plan.moves) {
    ASSERT_GT(mv.amount, 0);
    ASSERT_LT(mv.src.row, p.rows());
    ASSERT_LT(mv.src.col, p.cols());
    ASSERT_LT(mv.dst.row, q.rows());
    ASSERT_LT(mv.dst.col, q.cols());
    out[mv.src.row * p.cols() + mv.src.col] += mv.amount;
    in[mv.dst.row * q.cols() + mv.dst.col] += mv.amount;
  }
  EXPECT_EQ(G(p.rows(), p.cols(), out), p);
  EXPECT_EQ(G(q.rows(), q.cols(), in), q);
  EXPECT_EQ(plan_cost(r.plan), r.distance);
}

TEST(ManhattanCost, Examples) {
  EXPECT_EQ(manhattan_cost({0, 0}, {0, 0}), 0);
  EXPECT_EQ(manhattan_cost({0, 0}, {2, 3}), 5);
  EXPECT_EQ(manhattan_cost({1, 4}, {3, 1}), 5);
}

TEST(MwdExact, Examples) {
  EXPECT_EQ(mwd_exact(unit_at(3, 4, {0, 0}), unit_at(3, 4, {2, 3})).distance,
            5);
  // Frozen from the assignment oracle.
  const auto p1 = G(2, 2, {1, 1, 0, 0});
  const auto q1 = G(2, 2, {0, 0, 1, 1});
  EXPECT_EQ(mwd_oracle_assignment(p1, q1), 2);
  EXPECT_EQ(mwd_exact(p1, q1).distance, 2);
  const auto p2 = G(2, 2, {1, 0, 0, 0});
  const auto q2 = G(2, 2, {0, 0, 0, 1});
  EXPECT_EQ(mwd_oracle_assignment(p2, q2), 2);
  EXPECT_EQ(mwd_exact(p2, q2).distance, 2);
}

TEST(MwdExact, IdentityKeepsMassInPlace) {
  const auto p = G(2, 3, {3, 0, 1, 2, 2, 0});
  const auto r = mwd_exact(p, p);
  EXPECT_EQ(r.distance, 0);
  for (const auto& mv : r.plan.moves) EXPECT_EQ(mv.src, mv.dst);
  expect_valid_plan(p, p, r);
}

TEST(MwdExact, ZeroMassAndSingleCell) {
  const auto z = GridHistogram::Zeros(3, 3);
  const auto r = mwd_exact(z, z);
  EXPECT_EQ(r.distance, 0);
  EXPECT_TRUE(r.plan.moves.empty());
  EXPECT_EQ(mwd_exact(G(1, 1, {7}), G(1, 1, {7})).distance, 0);
}

TEST(MwdExact, Errors) {
  try {
    mwd_exact(G(2, 2, {1, 0, 0, 0}), G(1, 4, {1, 0, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  try {
    mwd_exact(G(1, 2, {1, 0}), G(1, 2, {1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMassMismatch);
  }
  try {
    mwd_exact(GridHistogram::Zeros(50, 50), GridHistogram::Zeros(50, 50),
              {.method = MwdMethod::kBipartiteDenseCost});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidArgument);
  }
  const Mass big = Mass{1} << 61;
  EXPECT_THROW(mwd_exact(G(1, 5, {big, 0, 0, 0, 0}), G(1, 5, {0, 0, 0, 0, big})),
               Error);
}

TEST(MwdOracle, Examples) {
  const auto p = G(2, 2, {1, 1, 0, 0});
  EXPECT_EQ(mwd_oracle_assignment(p, p), 0);
  EXPECT_EQ(mwd_oracle_assignment(G(2, 2, {1, 1, 0, 0}), G(2, 2, {0, 0, 1, 1})),
            2);
  try {
    mwd_oracle_assignment(G(1, 2, {13, 0}), G(1, 2, {0, 13}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMassTooLarge);
  }
}

TEST(MwdExact, MatchesOracle) {
  Gen gen(31);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = gen.size_in(1, 4);
    const std::size_t n = gen.size_in(1, 4);
    const Mass total = gen.mass_in(0, 12);
    const auto p = gen.grid_with_mass(m, n, total);
    const auto q = gen.grid_with_mass(m, n, total);
    const auto r = mwd_exact(p, q);
    ASSERT_EQ(r.distance, mwd_oracle_assignment(p, q));
    expect_valid_plan(p, q, r);
  }
}

constexpr MwdMethod kMethods[] = {MwdMethod::kGridFlow, MwdMethod::kBipartite,
                                  MwdMethod::kBipartiteDenseCost};

TEST(MwdExact, EveryMethodMatchesOracle) {
  Gen gen(38);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = gen.size_in(1, 4);
    const std::size_t n = gen.size_in(1, 4);
    const Mass total = gen.mass_in(0, 12);
    const auto p = gen.grid_with_mass(m, n, total);
    const auto q = gen.grid_with_mass(m, n, total);
    const Mass expected = mwd_oracle_assignment(p, q);
    for (MwdMethod method : kMethods) {
      const auto r = mwd_exact(p, q, {.method = method});
      ASSERT_EQ(r.distance, expected) << "method " << static_cast<int>(method);
      expect_valid_plan(p, q, r);
    }
  }
}

TEST(MwdExact, MethodsAgreeOnLargerInstances) {
  Gen gen(32);
  for (int k = 0; k < 60; ++k) {
    const std::size_t m = gen.size_in(1, 12);
    const std::size_t n = gen.size_in(1, 12);
    const Mass total = gen.mass_in(0, 400);
    const auto p = gen.grid_with_mass(m, n, total);
    const auto q = gen.grid_with_mass(m, n, total);
    const auto grid = mwd_exact(p, q);
    expect_valid_plan(p, q, grid);
    for (MwdMethod method : {MwdMethod::kBipartite,
                             MwdMethod::kBipartiteDenseCost}) {
      const auto r = mwd_exact(p, q, {.method = method});
      EXPECT_EQ(r.distance, grid.distance);
      expect_valid_plan(p, q, r);
    }
  }
}

TEST(MwdExact, MetricAxioms) {
  Gen gen(33);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = gen.size_in(1, 6);
    const std::size_t n = gen.size_in(1, 6);
    const Mass total = gen.mass_in(1, 60);
    const auto a = gen.grid_with_mass(m, n, total);
    const auto b = gen.grid_with_mass(m, n, total);
    const auto c = gen.grid_with_mass(m, n, total);
    const Mass ab = mwd_exact(a, b).distance;
    EXPECT_EQ(mwd_exact(a, a).distance, 0);
    EXPECT_EQ(ab, mwd_exact(b, a).distance);
    EXPECT_LE(mwd_exact(a, c).distance, ab + mwd_exact(b, c).distance);
    EXPECT_EQ(ab == 0, a == b);
  }
}

TEST(MwdExact, InvariantUnderGridIsometries) {
  Gen gen(34);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = gen.size_in(1, 6);
    const std::size_t n = gen.size_in(1, 6);
    const Mass total = gen.mass_in(0, 60);
    const auto p = gen.grid_with_mass(m, n, total);
    const auto q = gen.grid_with_mass(m, n, total);
    const Mass d = mwd_exact(p, q).distance;
    EXPECT_EQ(mwd_exact(transpose(p), transpose(q)).distance, d);
    EXPECT_EQ(mwd_exact(rotate90(p), rotate90(q)).distance, d);
  }
}

TEST(MwdExact, CommonMassCancels) {
  Gen gen(35);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = gen.size_in(1, 5);
    const std::size_t n = gen.size_in(1, 5);
    const Mass total = gen.mass_in(0, 50);
    const auto p = gen.grid_with_mass(m, n, total);
    const auto q = gen.grid_with_mass(m, n, total);
    std::vector<Mass> pr(p.size());
    std::vector<Mass> qr(q.size());
    for (std::size_t c = 0; c < p.size(); ++c) {
      const Mass r = gen.mass_in(0, std::min(p.cells()[c], q.cells()[c]));
      pr[c] = p.cells()[c] - r;
      qr[c] = q.cells()[c] - r;
    }
    EXPECT_EQ(mwd_exact(G(m, n, pr), G(m, n, qr)).distance,
              mwd_exact(p, q).distance);
  }
}

TEST(MwdExact, ProjectionLowerBounds) {
  Gen gen(36);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = gen.size_in(1, 6);
    const std::size_t n = gen.size_in(1, 6);
    const Mass total = gen.mass_in(0, 80);
    const auto p = gen.grid_with_mass(m, n, total);
    const auto q = gen.grid_with_mass(m, n, total);
    auto row_sums = [](const GridHistogram& g) {
      std::vector<Mass> v(g.rows(), 0);
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) v[i] += g.at(i, j);
      return MassVector(std::move(v));
    };
    const Mass d = mwd_exact(p, q).distance;
    EXPECT_GE(d, wd_1d(row_sums(p), row_sums(q)).distance);
    EXPECT_GE(d, wd_1d(row_sums(transpose(p)), row_sums(transpose(q))).distance);
  }
}

TEST(MwdExact, PlanValidityOnLargerGrids) {
  Gen gen(37);
  for (int k = 0; k < 30; ++k) {
    const std::size_t m = gen.size_in(5, 14);
    const std::size_t n = gen.size_in(5, 14);
    auto p = gen.grid(m, n, 9);
    auto q = gen.grid_with_mass(m, n, total_mass(p));
    expect_valid_plan(p, q, mwd_exact(p, q));
  }
}

}  // namespace
}  // namespace gridwd
