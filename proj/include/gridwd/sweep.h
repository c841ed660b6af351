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

#ifndef GRIDWD_SWEEP_H_
#define GRIDWD_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridwd/grid.h"

namespace gridwd {

struct SweepConfig {
  std::size_t n_fixed = 8;
  std::size_t m_min = 2;
  std::size_t m_max = 8;
  std::size_t trials_per_m = 20;
  Mass cell_max = 9;
  std::uint64_t master_seed = 42;
  // Trials whose total mass exceeds the cap skip the exact solver.
  std::optional<Mass> mwd_mass_cap = 4000;
  // Repetitions per timed value; the minimum is reported.
  int timing_repeats = 3;
};

// Throws kInvalidArgument on an inconsistent config.
void validate(const SweepConfig& cfg);

// Sentinel stored in BenchRecord::mwd when the exact solver did not run.
inline constexpr Mass kMwdNotComputed = -1;

struct BenchRecord {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Mass mwd = kMwdNotComputed;
  Mass wd_vec = 0;
  Mass qmwd = 0;
  std::optional<double> err_wd;
  std::optional<double> err_qmwd;
  std::int64_t time_mwd_ns = 0;
  std::int64_t time_qmwd_ns = 0;
  std::int64_t time_wd_ns = 0;
  // Set when the record must not enter error aggregates; fail_reason says why
  // ("mwd_zero", "mwd_mass_cap", or an error kind name).
  bool excluded = false;
  std::string fail_reason;
};

// Cells i.i.d. uniform on {0, ..., cell_max}, drawn in row-major order from a
// SeededRng. cell_max must be >= 0.
GridHistogram gen_random_grid(std::size_t m, std::size_t n, std::uint64_t seed,
                              Mass cell_max);

// Adds the mass deficit to the lighter grid one unit at a time at uniformly
// random cells. Throws kDimensionMismatch.
std::pair<GridHistogram, GridHistogram> equalize_mass(const GridHistogram& p,
                                                      const GridHistogram& q,
                                                      std::uint64_t seed);

// One trial: generate, equalize, time all three distances.
BenchRecord run_trial(const SweepConfig& cfg, std::size_t m,
                      std::size_t trial);

// All trials for m in [m_min, m_max], ordered by (m, trial). Trials are
// distributed over OpenMP threads; distance columns are identical to
// run_sweep_serial.
std::vector<BenchRecord> run_sweep(const SweepConfig& cfg);

// Single-threaded reference; gives uncontended timings.
std::vector<BenchRecord> run_sweep_serial(const SweepConfig& cfg);

}  // namespace gridwd

#endif  // GRIDWD_SWEEP_H_
