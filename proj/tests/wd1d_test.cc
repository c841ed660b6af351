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

#include <gtest/gtest.h>

#include "generators.h"
#include "gridwd/error.h"
#include "gridwd/oracle.h"

namespace gridwd {
namespace {

using testing::Gen;
using testing::reversed;

Mass wd(std::vector<Mass> a, std::vector<Mass> b) {
  return wd_1d(MassVector(std::move(a)), MassVector(std::move(b))).distance;
}

Mass oracle(std::vector<Mass> a, std::vector<Mass> b) {
  return wd_1d_oracle(MassVector(std::move(a)), MassVector(std::move(b)))
      .distance;
}

TEST(Wd1d, Examples) {
  EXPECT_EQ(wd({4, 0, 2}, {4, 0, 2}), 0);
  EXPECT_EQ(wd({1, 0, 0}, {0, 0, 1}), 2);
  EXPECT_EQ(wd({2, 0, 0, 0}, {0, 0, 0, 2}), 6);
  EXPECT_EQ(wd({5}, {5}), 0);
  EXPECT_EQ(wd({}, {}), 0);
}

TEST(Wd1d, OracleFrozenValues) {
  // Frozen from the oracle: units at {0,0,0,1} vs {0,1,1,1}.
  EXPECT_EQ(oracle({3, 1}, {1, 3}), 2);
  EXPECT_EQ(wd({3, 1}, {1, 3}), 2);
  EXPECT_EQ(oracle({1, 1}, {1, 1}), 0);
  EXPECT_EQ(oracle({1, 0}, {0, 1}), 1);
}

TEST(Wd1d, Errors) {
  try {
    wd({1, 0}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLengthMismatch);
  }
  try {
    wd({1, 0}, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMassMismatch);
  }
  try {
    oracle({65, 0}, {0, 65});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMassTooLarge);
  }
}

TEST(Wd1d, OverflowGuard) {
  const Mass big = Mass{1} << 61;
  EXPECT_THROW(wd({big, 0, 0, 0, 0}, {0, 0, 0, 0, big}), Error);
}

TEST(Wd1d, MatchesOracleOnRandomInstances) {
  Gen gen(21);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t len = gen.size_in(1, 10);
    const Mass total = gen.mass_in(0, 64);
    const auto a = gen.vector_with_mass(len, total);
    const auto b = gen.vector_with_mass(len, total);
    ASSERT_EQ(wd_1d(a, b), wd_1d_oracle(a, b));
  }
}

TEST(Wd1d, MetricAxioms) {
  Gen gen(22);
  for (int k = 0; k < 1000; ++k) {
    const std::size_t len = gen.size_in(1, 20);
    const Mass total = gen.mass_in(0, 100);
    const auto a = gen.vector_with_mass(len, total);
    const auto b = gen.vector_with_mass(len, total);
    const auto c = gen.vector_with_mass(len, total);
    const Mass ab = wd_1d(a, b).distance;
    EXPECT_EQ(wd_1d(a, a).distance, 0);
    EXPECT_EQ(ab, wd_1d(b, a).distance);
    EXPECT_LE(wd_1d(a, c).distance, ab + wd_1d(b, c).distance);
    EXPECT_GE(ab, 0);
    EXPECT_LE(ab, total * static_cast<Mass>(len - 1));
  }
}

TEST(Wd1d, ReversalInvariance) {
  Gen gen(23);
  for (int k = 0; k < 500; ++k) {
    const std::size_t len = gen.size_in(1, 30);
    const Mass total = gen.mass_in(0, 200);
    const auto a = gen.vector_with_mass(len, total);
    const auto b = gen.vector_with_mass(len, total);
    EXPECT_EQ(wd_1d(reversed(a), reversed(b)), wd_1d(a, b));
  }
}

TEST(Wd1d, ZeroPaddingInvariance) {
  Gen gen(24);
  for (int k = 0; k < 300; ++k) {
    const std::size_t len = gen.size_in(1, 15);
    const Mass total = gen.mass_in(0, 80);
    const auto a = gen.vector_with_mass(len, total);
    const auto b = gen.vector_with_mass(len, total);
    const std::size_t front = gen.size_in(0, 5);
    const std::size_t back = gen.size_in(0, 5);
    auto pad = [&](const MassVector& v) {
      std::vector<Mass> out(front, 0);
      out.insert(out.end(), v.values().begin(), v.values().end());
      out.resize(out.size() + back, 0);
      return MassVector(std::move(out));
    };
    EXPECT_EQ(wd_1d(pad(a), pad(b)), wd_1d(a, b));
  }
}

}  // namespace
}  // namespace gridwd
