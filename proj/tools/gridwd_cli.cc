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

// gridwd: distances between integer mass grids and the accuracy/runtime
// benchmark sweep.
//
//   gridwd dist P.txt Q.txt [--metric mwd|qmwd|wdvec|all] [--plan] [--json]
//   gridwd bench [--n 8] [--m-min 2] [--m-max 8] [--trials 20] ...
//   gridwd plot --in records.csv --out charts.svg
//
// Exit codes: 0 success, 2 input/usage error, 3 numerical precondition
// violation, 4 I/O error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridwd/error.h"
#include "gridwd/grid.h"
#include "gridwd/mwd.h"
#include "gridwd/qmwd.h"
#include "gridwd/report.h"
#include "gridwd/sweep.h"
#include "gridwd/wd1d.h"

namespace {

using gridwd::Error;
using gridwd::ErrorKind;
using gridwd::Mass;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitIo = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmpty:
    case ErrorKind::kRaggedRows:
    case ErrorKind::kBadToken:
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kEmptyInput:
      return kExitUsage;
    case ErrorKind::kIoFailure:
      return kExitIo;
    case ErrorKind::kLengthMismatch:
    case ErrorKind::kMassMismatch:
    case ErrorKind::kDimensionMismatch:
    case ErrorKind::kMassTooLarge:
    case ErrorKind::kOverflow:
    case ErrorKind::kNegativeEntry:
    case ErrorKind::kNonFinite:
    case ErrorKind::kAllZero:
    case ErrorKind::kResidueTooLarge:
      return kExitNumeric;
  }
  return kExitUsage;
}

gridwd::GridHistogram load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoFailure, "cannot open " + path);
  try {
    return gridwd::parse_grid(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoFailure, "cannot write " + path);
  return out;
}

template <typename Fn>
auto timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  auto result = fn();
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return std::pair{std::move(result), static_cast<std::int64_t>(ns)};
}

struct DistArgs {
  std::string file_p;
  std::string file_q;
  std::string metric = "all";
  bool plan = false;
  bool json = false;
  bool dense_cost = false;
  std::string solver = "grid";
};

int run_dist(const DistArgs& args) {
  const bool want_mwd = args.metric == "mwd" || args.metric == "all";
  const bool want_qmwd = args.metric == "qmwd" || args.metric == "all";
  const bool want_wd = args.metric == "wdvec" || args.metric == "all";
  if (args.plan && !want_mwd) {
    throw Error(ErrorKind::kInvalidArgument, "--plan requires --metric mwd or all");
  }

  const auto p = load_grid(args.file_p);
  const auto q = load_grid(args.file_q);

  nlohmann::ordered_json j;
  j["m"] = p.rows();
  j["n"] = p.cols();
  std::optional<gridwd::MwdResult> mwd;
  std::optional<gridwd::QmwdBreakdown> qb;
  std::optional<Mass> wd;
  if (want_mwd) {
    gridwd::MwdOptions options;
    if (args.dense_cost) {
      options.method = gridwd::MwdMethod::kBipartiteDenseCost;
    } else if (args.solver == "bipartite") {
      options.method = gridwd::MwdMethod::kBipartite;
    }
    auto [r, ns] = timed([&] { return gridwd::mwd_exact(p, q, options); });
    mwd = std::move(r);
    j["mwd"] = mwd->distance;
    j["time_mwd_ns"] = ns;
  }
  if (want_wd) {
    auto [r, ns] = timed([&] {
      return gridwd::wd_1d(gridwd::vec_row_major(p), gridwd::vec_row_major(q))
          .distance;
    });
    wd = r;
    j["wd_vec"] = r;
    j["time_wd_ns"] = ns;
  }
  if (want_qmwd) {
    auto [r, ns] = timed([&] { return gridwd::qmwd(p, q); });
    qb = r;
    j["qmwd"] = r.qmwd;
    j["time_qmwd_ns"] = ns;
    j["qmwd_breakdown"] = {{"wd_row", r.wd_row},   {"wd_rot", r.wd_rot},
                           {"wd_transp", r.wd_transp}, {"est_row", r.est_row},
                           {"est_rot", r.est_rot}, {"est_transp", r.est_transp}};
  }
  if (mwd && mwd->distance > 0) {
    const auto ref = static_cast<double>(mwd->distance);
    if (wd) j["err_wd"] = std::abs(ref - static_cast<double>(*wd)) / ref;
    if (qb) j["err_qmwd"] = std::abs(ref - static_cast<double>(qb->qmwd)) / ref;
  }

  if (args.json) {
    if (args.plan) {
      auto& moves = j["plan"] = nlohmann::json::array();
      for (const auto& mv : mwd->plan.moves) {
        moves.push_back({{"src", {mv.src.row, mv.src.col}},
                         {"dst", {mv.dst.row, mv.dst.col}},
                         {"amount", mv.amount}});
      }
    }
    std::cout << j.dump() << '\n';
    return kExitOk;
  }

  if (mwd) std::cout << "mwd " << mwd->distance << '\n';
  if (wd) std::cout << "wd_vec " << *wd << '\n';
  if (qb) {
    std::cout << "qmwd " << qb->qmwd << '\n'
              << "  wd_row " << qb->wd_row << " est_row " << qb->est_row << '\n'
              << "  wd_rot " << qb->wd_rot << " est_rot " << qb->est_rot << '\n'
              << "  wd_transp " << qb->wd_transp << " est_transp "
              << qb->est_transp << '\n';
  }
  if (args.plan) {
    std::cout << "plan " << mwd->plan.moves.size() << " moves\n";
    for (const auto& mv : mwd->plan.moves) {
      std::cout << "  (" << mv.src.row << ',' << mv.src.col << ") -> ("
                << mv.dst.row << ',' << mv.dst.col << ") " << mv.amount
                << '\n';
    }
  }
  return kExitOk;
}

struct BenchArgs {
  gridwd::SweepConfig cfg;
  Mass mass_cap = 4000;
  bool no_mass_cap = false;
  bool paper_scale = false;
  std::string out;
  std::string summary_out;
  bool timing_serial = false;
};

int run_bench(BenchArgs args) {
  if (args.paper_scale) {
    args.cfg.n_fixed = 30;
    args.cfg.m_min = 2;
    args.cfg.m_max = 30;
    args.cfg.trials_per_m = 20;
  }
  args.cfg.mwd_mass_cap =
      args.no_mass_cap ? std::nullopt : std::optional<Mass>(args.mass_cap);
  const auto records = args.timing_serial ? gridwd::run_sweep_serial(args.cfg)
                                          : gridwd::run_sweep(args.cfg);
  if (args.out.empty()) {
    gridwd::write_records_csv(records, std::cout);
  } else {
    auto out = open_output(args.out);
    gridwd::write_records_csv(records, out);
  }
  if (!args.summary_out.empty()) {
    auto out = open_output(args.summary_out);
    gridwd::write_summary_csv(gridwd::aggregate(records), out);
  } else if (!args.out.empty()) {
    gridwd::write_summary_csv(gridwd::aggregate(records), std::cout);
  }
  return kExitOk;
}

struct PlotArgs {
  std::string in;
  std::string out;
};

int run_plot(const PlotArgs& args) {
  std::ifstream in(args.in, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoFailure, "cannot open " + args.in);
  const auto records = gridwd::read_records_csv(in);
  const auto summary = gridwd::aggregate(records);
  auto out = open_output(args.out);
  gridwd::write_svg(summary, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Manhattan, quasi-Manhattan and vectorized Wasserstein "
               "distances between integer grids"};
  app.require_subcommand(1);

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distances between two grid files");
  dist_cmd->add_option("fileP", dist.file_p, "Source grid")->required();
  dist_cmd->add_option("fileQ", dist.file_q, "Destination grid")->required();
  dist_cmd->add_option("--metric", dist.metric, "Metric to compute")
      ->check(CLI::IsMember({"mwd", "qmwd", "wdvec", "all"}));
  dist_cmd->add_flag("--plan", dist.plan, "Print the MWD transport plan");
  dist_cmd->add_flag("--json", dist.json, "Emit one JSON object");
  dist_cmd->add_flag("--dense-cost", dist.dense_cost,
                     "Materialize the full cost tensor and solve the "
                     "bipartite problem (small grids only)");
  dist_cmd->add_option("--solver", dist.solver, "Exact MWD network")
      ->check(CLI::IsMember({"grid", "bipartite"}));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run the accuracy/runtime sweep");
  bench_cmd->add_option("--n", bench.cfg.n_fixed, "Fixed column count");
  bench_cmd->add_option("--m-min", bench.cfg.m_min, "Smallest row count");
  bench_cmd->add_option("--m-max", bench.cfg.m_max, "Largest row count");
  bench_cmd->add_option("--trials", bench.cfg.trials_per_m, "Trials per m");
  bench_cmd->add_option("--cell-max", bench.cfg.cell_max,
                        "Cells drawn uniformly from 0..cell-max");
  bench_cmd->add_option("--seed", bench.cfg.master_seed, "Master seed");
  bench_cmd->add_option("--mwd-mass-cap", bench.mass_cap,
                        "Skip the exact solver above this total mass");
  bench_cmd->add_flag("--no-mass-cap", bench.no_mass_cap,
                      "Always run the exact solver");
  bench_cmd->add_option("--repeats", bench.cfg.timing_repeats,
                        "Timing repetitions per value (minimum reported)");
  bench_cmd->add_flag("--paper-scale", bench.paper_scale,
                      "n=30, m=2..30, 20 trials");
  bench_cmd->add_option("--out", bench.out, "Record CSV (default stdout)");
  bench_cmd->add_option("--summary-out", bench.summary_out,
                        "Per-m summary CSV");
  bench_cmd->add_flag("--timing-serial", bench.timing_serial,
                      "Run trials one at a time for uncontended timings");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render charts from record CSV");
  plot_cmd->add_option("--in", plot.in, "Record CSV")->required();
  plot_cmd->add_option("--out", plot.out, "SVG output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*dist_cmd) return run_dist(dist);
    if (*bench_cmd) return run_bench(bench);
    if (*plot_cmd) return run_plot(plot);
  } catch (const Error& e) {
    std::cerr << "gridwd: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitUsage;
}
