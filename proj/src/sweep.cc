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

#include "gridwd/sweep.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <limits>
#include <string>
#include <utility>

#include "gridwd/error.h"
#include "gridwd/mwd.h"
#include "gridwd/qmwd.h"
#include "gridwd/random.h"
#include "gridwd/wd1d.h"

namespace gridwd {
namespace {

// Runs fn `repeats` times; returns the last result and the fastest time.
template <typename Fn>
auto timed_min(int repeats, Fn&& fn) {
  using Clock = std::chrono::steady_clock;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  decltype(fn()) result{};
  for (int r = 0; r < repeats; ++r) {
    const auto start = Clock::now();
    result = fn();
    const auto stop = Clock::now();
    best = std::min<std::int64_t>(
        best,
        std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
            .count());
  }
  return std::pair{std::move(result), best};
}

double relative_error(Mass reference, Mass estimate) {
  return std::abs(static_cast<double>(reference - estimate)) /
         static_cast<double>(reference);
}

}  // namespace

void validate(const SweepConfig& cfg) {
  auto fail = [](const char* what) {
    throw Error(ErrorKind::kInvalidArgument, what);
  };
  if (cfg.n_fixed < 1) fail("sweep: n must be >= 1");
  if (cfg.m_min < 1) fail("sweep: m-min must be >= 1");
  if (cfg.m_min > cfg.m_max) fail("sweep: m-min must not exceed m-max");
  if (cfg.trials_per_m < 1) fail("sweep: trials must be >= 1");
  if (cfg.cell_max < 1) fail("sweep: cell-max must be >= 1");
  if (cfg.timing_repeats < 1) fail("sweep: timing repeats must be >= 1");
  if (cfg.mwd_mass_cap && *cfg.mwd_mass_cap < 0) {
    fail("sweep: mwd mass cap must be nonnegative");
  }
}

GridHistogram gen_random_grid(std::size_t m, std::size_t n, std::uint64_t seed,
                              Mass cell_max) {
  if (cell_max < 0) {
    throw Error(ErrorKind::kInvalidArgument, "gen_random_grid: cell_max < 0");
  }
  SeededRng rng(seed);
  const auto bound = static_cast<std::uint64_t>(cell_max) + 1;
  std::vector<Mass> cells(m * n);
  for (Mass& c : cells) c = static_cast<Mass>(rng.below(bound));
  return GridHistogram(m, n, std::move(cells));
}

std::pair<GridHistogram, GridHistogram> equalize_mass(const GridHistogram& p,
                                                      const GridHistogram& q,
                                                      std::uint64_t seed) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw Error(ErrorKind::kDimensionMismatch, "equalize_mass: dimensions differ");
  }
  const Mass tp = total_mass(p);
  const Mass tq = total_mass(q);
  if (tp == tq) return {p, q};

  const GridHistogram& light = tp < tq ? p : q;
  std::vector<Mass> cells(light.cells().begin(), light.cells().end());
  SeededRng rng(seed);
  for (Mass deficit = tp < tq ? tq - tp : tp - tq; deficit > 0; --deficit) {
    ++cells[rng.below(cells.size())];
  }
  GridHistogram topped(light.rows(), light.cols(), std::move(cells));
  if (tp < tq) return {std::move(topped), q};
  return {p, std::move(topped)};
}

BenchRecord run_trial(const SweepConfig& cfg, std::size_t m,
                      std::size_t trial) {
  BenchRecord rec;
  rec.m = m;
  rec.n = cfg.n_fixed;
  rec.trial = trial;
  rec.seed = derive_trial_seed(cfg.master_seed, m, trial);
  try {
    const auto p0 = gen_random_grid(m, rec.n, stream_seed(rec.seed, Stream::kGridP),
                                    cfg.cell_max);
    const auto q0 = gen_random_grid(m, rec.n, stream_seed(rec.seed, Stream::kGridQ),
                                    cfg.cell_max);
    const auto [p, q] =
        equalize_mass(p0, q0, stream_seed(rec.seed, Stream::kEqualize));

    auto [wd, wd_ns] = timed_min(cfg.timing_repeats, [&] {
      return wd_1d(vec_row_major(p), vec_row_major(q)).distance;
    });
    rec.wd_vec = wd;
    rec.time_wd_ns = wd_ns;

    auto [qm, qm_ns] =
        timed_min(cfg.timing_repeats, [&] { return qmwd(p, q).qmwd; });
    rec.qmwd = qm;
    rec.time_qmwd_ns = qm_ns;

    if (cfg.mwd_mass_cap && total_mass(p) > *cfg.mwd_mass_cap) {
      rec.excluded = true;
      rec.fail_reason = "mwd_mass_cap";
      return rec;
    }
    auto [mw, mw_ns] = timed_min(cfg.timing_repeats,
                                 [&] { return mwd_exact(p, q).distance; });
    rec.mwd = mw;
    rec.time_mwd_ns = mw_ns;
    if (rec.mwd == 0) {
      rec.excluded = true;
      rec.fail_reason = "mwd_zero";
      return rec;
    }
    rec.err_wd = relative_error(rec.mwd, rec.wd_vec);
    rec.err_qmwd = relative_error(rec.mwd, rec.qmwd);
  } catch (const Error& e) {
    rec.excluded = true;
    rec.fail_reason = std::string(ErrorKindName(e.kind()));
  } catch (const std::exception&) {
    // Nothing may escape the OpenMP region in run_sweep.
    rec.excluded = true;
    rec.fail_reason = "InternalError";
  }
  return rec;
}

std::vector<BenchRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::size_t per_m = cfg.trials_per_m;
  const std::size_t count = (cfg.m_max - cfg.m_min + 1) * per_m;
  std::vector<BenchRecord> records(count);
  const auto total = static_cast<std::int64_t>(count);
  // Trial cost grows with m and varies with mass, hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < total; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    records[idx] = run_trial(cfg, cfg.m_min + idx / per_m, idx % per_m);
  }
  return records;
}

std::vector<BenchRecord> run_sweep_serial(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<BenchRecord> records;
  records.reserve((cfg.m_max - cfg.m_min + 1) * cfg.trials_per_m);
  for (std::size_t m = cfg.m_min; m <= cfg.m_max; ++m) {
    for (std::size_t t = 0; t < cfg.trials_per_m; ++t) {
      records.push_back(run_trial(cfg, m, t));
    }
  }
  return records;
}

}  // namespace gridwd
