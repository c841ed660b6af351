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

#ifndef GRIDWD_REPORT_H_
#define GRIDWD_REPORT_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gridwd/sweep.h"

namespace gridwd {

inline constexpr std::string_view kRecordCsvHeader =
    "m,n,trial,seed,mwd,wd_vec,qmwd,err_wd,err_qmwd,time_mwd_ns,"
    "time_qmwd_ns,time_wd_ns,excluded,fail_reason";

inline constexpr std::string_view kSummaryCsvHeader =
    "m,n,trials,excluded,mean_err_wd,median_err_wd,mean_err_qmwd,"
    "median_err_qmwd,mean_time_mwd_ns,mean_time_qmwd_ns,mean_time_wd_ns";

struct SweepSummary {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trials = 0;
  std::size_t excluded = 0;
  // Empty when every trial of this m was excluded.
  std::optional<double> mean_err_wd;
  std::optional<double> median_err_wd;
  std::optional<double> mean_err_qmwd;
  std::optional<double> median_err_qmwd;
  // mwd timing averages only trials where the solver ran.
  std::optional<double> mean_time_mwd_ns;
  double mean_time_qmwd_ns = 0;
  double mean_time_wd_ns = 0;
};

// One row per distinct m, ascending. Throws kEmptyInput.
std::vector<SweepSummary> aggregate(std::span<const BenchRecord> records);

// RFC 4180 output with kRecordCsvHeader. Undefined errors are empty fields;
// reals are written in shortest round-trip form so that read_records_csv
// restores them exactly. Throws kIoFailure if the stream fails.
void write_records_csv(std::span<const BenchRecord> records, std::ostream& out);
// Throws kBadToken on malformed content or a header mismatch.
std::vector<BenchRecord> read_records_csv(std::istream& in);

void write_summary_csv(std::span<const SweepSummary> rows, std::ostream& out);

// Two panels: mean relative error vs m (WD, QMWD) and mean execution time vs
// m (MWD, QMWD, WD) on a log10 axis. One <polyline> per series.
void write_svg(std::span<const SweepSummary> rows, std::ostream& out);

// RFC 4180 reader: quoted fields may contain commas, doubled quotes and line
// breaks. Exposed for tests.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace gridwd

#endif  // GRIDWD_REPORT_H_
