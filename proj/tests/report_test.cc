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

#include "gridwd/report.h"

#include <regex>
#include <sstream>
#include <stack>

#include <gtest/gtest.h>

#include "gridwd/error.h"

namespace gridwd {
namespace {

BenchRecord rec(std::size_t m, std::optional<double> err_wd,
                std::optional<double> err_qmwd) {
  BenchRecord r;
  r.m = m;
  r.n = 8;
  r.mwd = err_wd ? 10 : 0;
  r.err_wd = err_wd;
  r.err_qmwd = err_qmwd;
  r.excluded = !err_wd;
  r.fail_reason = err_wd ? "" : "mwd_zero";
  r.time_qmwd_ns = 100;
  r.time_wd_ns = 50;
  r.time_mwd_ns = 1000;
  return r;
}

TEST(Aggregate, SingleRecord) {
  const std::vector<BenchRecord> rs{rec(2, 0.5, 0.1)};
  const auto s = aggregate(rs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].m, 2u);
  EXPECT_DOUBLE_EQ(*s[0].mean_err_qmwd, 0.1);
  EXPECT_DOUBLE_EQ(*s[0].median_err_qmwd, 0.1);
  EXPECT_EQ(s[0].excluded, 0u);
}

TEST(Aggregate, AllExcluded) {
  const std::vector<BenchRecord> rs{rec(3, std::nullopt, std::nullopt),
                                    rec(3, std::nullopt, std::nullopt)};
  const auto s = aggregate(rs);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].trials, 2u);
  EXPECT_EQ(s[0].excluded, 2u);
  EXPECT_FALSE(s[0].mean_err_wd.has_value());
  EXPECT_FALSE(s[0].median_err_qmwd.has_value());
}

TEST(Aggregate, MeanEqualsMedianOnSymmetricData) {
  std::vector<BenchRecord> rs;
  for (double e : {0.1, 0.2, 0.3, 0.4, 0.5}) rs.push_back(rec(4, e, 1 - e));
  rs.push_back(rec(5, 0.25, 0.75));
  rs.push_back(rec(5, 0.75, 0.25));
  const auto s = aggregate(rs);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(*s[0].mean_err_wd, *s[0].median_err_wd);
  EXPECT_DOUBLE_EQ(*s[0].mean_err_qmwd, *s[0].median_err_qmwd);
  EXPECT_DOUBLE_EQ(*s[0].median_err_wd, 0.3);
  EXPECT_DOUBLE_EQ(*s[1].mean_err_wd, 0.5);
  EXPECT_DOUBLE_EQ(*s[1].median_err_wd, 0.5);
}

TEST(Aggregate, SkippedSolverDoesNotEnterMwdTiming) {
  auto skipped = rec(2, std::nullopt, std::nullopt);
  skipped.mwd = kMwdNotComputed;
  skipped.time_mwd_ns = 0;
  const std::vector<BenchRecord> rs{rec(2, 0.5, 0.1), skipped};
  EXPECT_DOUBLE_EQ(*aggregate(rs)[0].mean_time_mwd_ns, 1000);
}

TEST(Aggregate, EmptyInput) {
  try {
    aggregate({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kEmptyInput);
  }
}

TEST(Csv, EmptyWritesHeaderOnly) {
  std::ostringstream out;
  write_records_csv({}, out);
  EXPECT_EQ(out.str(), std::string(kRecordCsvHeader) + "\n");
  std::ostringstream sum;
  write_summary_csv({}, sum);
  EXPECT_EQ(sum.str(), std::string(kSummaryCsvHeader) + "\n");
}

TEST(Csv, RoundTrip) {
  std::vector<BenchRecord> rs{rec(2, 1.0 / 3, 0.1), rec(3, std::nullopt, std::nullopt)};
  rs[0].seed = 0xFFFFFFFFFFFFFFFFULL;
  rs[1].fail_reason = "needs \"quotes\", commas\nand newlines";
  rs[1].mwd = kMwdNotComputed;
  std::ostringstream out;
  write_records_csv(rs, out);
  std::istringstream in(out.str());
  const auto back = read_records_csv(in);
  ASSERT_EQ(back.size(), rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    EXPECT_EQ(back[i].m, rs[i].m);
    EXPECT_EQ(back[i].n, rs[i].n);
    EXPECT_EQ(back[i].trial, rs[i].trial);
    EXPECT_EQ(back[i].seed, rs[i].seed);
    EXPECT_EQ(back[i].mwd, rs[i].mwd);
    EXPECT_EQ(back[i].wd_vec, rs[i].wd_vec);
    EXPECT_EQ(back[i].qmwd, rs[i].qmwd);
    EXPECT_EQ(back[i].err_wd, rs[i].err_wd);
    EXPECT_EQ(back[i].err_qmwd, rs[i].err_qmwd);
    EXPECT_EQ(back[i].time_mwd_ns, rs[i].time_mwd_ns);
    EXPECT_EQ(back[i].time_qmwd_ns, rs[i].time_qmwd_ns);
    EXPECT_EQ(back[i].time_wd_ns, rs[i].time_wd_ns);
    EXPECT_EQ(back[i].excluded, rs[i].excluded);
    EXPECT_EQ(back[i].fail_reason, rs[i].fail_reason);
  }
}

TEST(Csv, ParserHandlesQuotingAndCrlf) {
  const auto rows = parse_csv("a,\"b,c\",\"d\"\"e\"\r\n,x\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"a", "b,c", "d\"e"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"", "x"}));
  EXPECT_THROW(parse_csv("\"open"), Error);
}

TEST(Csv, RejectsWrongHeaderAndBadNumbers) {
  std::istringstream bad_header("m,n\n1,2\n");
  EXPECT_THROW(read_records_csv(bad_header), Error);
  std::istringstream bad_value(std::string(kRecordCsvHeader) +
                               "\n2,8,0,1,x,0,0,,,0,0,0,0,\n");
  EXPECT_THROW(read_records_csv(bad_value), Error);
}

// Minimal well-formedness check: balanced tags, proper nesting, one root.
bool well_formed_xml(const std::string& doc) {
  static const std::regex tag(R"(<(/?)([A-Za-z_][\w:.-]*)[^>]*?(/?)>)");
  std::stack<std::string> open;
  int roots = 0;
  for (auto it = std::sregex_iterator(doc.begin(), doc.end(), tag);
       it != std::sregex_iterator(); ++it) {
    const auto& mt = *it;
    const std::string name = mt[2];
    if (mt[1] == "/") {
      if (open.empty() || open.top() != name) return false;
      open.pop();
    } else if (mt[3] != "/") {
      if (open.empty()) ++roots;
      open.push(name);
    } else if (open.empty()) {
      ++roots;
    }
  }
  return open.empty() && roots == 1;
}

int count(const std::string& s, const std::string& needle) {
  int c = 0;
  for (auto p = s.find(needle); p != std::string::npos;
       p = s.find(needle, p + 1)) {
    ++c;
  }
  return c;
}

TEST(Svg, OnePolylinePerSeries) {
  std::vector<BenchRecord> rs;
  for (std::size_t m = 2; m <= 5; ++m) {
    rs.push_back(rec(m, 0.5 / m, 0.1 / m));
    rs.back().time_mwd_ns = 1000 * static_cast<std::int64_t>(m * m);
  }
  const auto summary = aggregate(rs);
  std::ostringstream out;
  write_svg(summary, out);
  const std::string svg = out.str();
  EXPECT_TRUE(well_formed_xml(svg));
  EXPECT_EQ(count(svg, "<polyline"), 5);
  EXPECT_EQ(count(svg, "<svg"), 1);
  EXPECT_NE(svg.find("Average relative error"), std::string::npos);
  EXPECT_NE(svg.find("Average execution time"), std::string::npos);
}

TEST(Svg, EmptySummaryStillWellFormed) {
  std::ostringstream out;
  write_svg({}, out);
  EXPECT_TRUE(well_formed_xml(out.str()));
  EXPECT_EQ(count(out.str(), "<polyline"), 5);
}

}  // namespace
}  // namespace gridwd
