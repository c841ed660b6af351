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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iterator>
#include <map>
#include <sstream>

#include "gridwd/error.h"

namespace gridwd {
namespace {

std::optional<double> mean(const std::vector<double>& v) {
  if (v.empty()) return std::nullopt;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::optional<double> median(std::vector<double> v) {
  if (v.empty()) return std::nullopt;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2;
}

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_opt(const std::optional<double>& x) {
  return x ? format_real(*x) : std::string();
}

std::string quote_csv(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T>
T parse_number(const std::string& field, const char* column) {
  T value{};
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() ||
      ptr != field.data() + field.size()) {
    throw Error(ErrorKind::kBadToken, std::string("csv: bad value '") + field +
                                          "' in column " + column);
  }
  return value;
}

std::optional<double> parse_opt_real(const std::string& field,
                                     const char* column) {
  if (field.empty()) return std::nullopt;
  return parse_number<double>(field, column);
}

void check_stream(const std::ostream& out) {
  if (!out) throw Error(ErrorKind::kIoFailure, "write failed");
}

}  // namespace

std::vector<SweepSummary> aggregate(std::span<const BenchRecord> records) {
  if (records.empty()) {
    throw Error(ErrorKind::kEmptyInput, "aggregate: no records");
  }
  struct Acc {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t excluded = 0;
    std::vector<double> err_wd, err_qmwd, t_mwd, t_qmwd, t_wd;
  };
  std::map<std::size_t, Acc> by_m;
  for (const auto& r : records) {
    Acc& a = by_m[r.m];
    a.n = r.n;
    ++a.trials;
    if (r.excluded || !r.err_wd || !r.err_qmwd) {
      ++a.excluded;
    } else {
      a.err_wd.push_back(*r.err_wd);
      a.err_qmwd.push_back(*r.err_qmwd);
    }
    if (r.mwd != kMwdNotComputed) {
      a.t_mwd.push_back(static_cast<double>(r.time_mwd_ns));
    }
    a.t_qmwd.push_back(static_cast<double>(r.time_qmwd_ns));
    a.t_wd.push_back(static_cast<double>(r.time_wd_ns));
  }
  std::vector<SweepSummary> out;
  for (auto& [m, a] : by_m) {
    SweepSummary s;
    s.m = m;
    s.n = a.n;
    s.trials = a.trials;
    s.excluded = a.excluded;
    s.mean_err_wd = mean(a.err_wd);
    s.median_err_wd = median(a.err_wd);
    s.mean_err_qmwd = mean(a.err_qmwd);
    s.median_err_qmwd = median(a.err_qmwd);
    s.mean_time_mwd_ns = mean(a.t_mwd);
    s.mean_time_qmwd_ns = mean(a.t_qmwd).value_or(0);
    s.mean_time_wd_ns = mean(a.t_wd).value_or(0);
    out.push_back(s);
  }
  return out;
}

void write_records_csv(std::span<const BenchRecord> records,
                       std::ostream& out) {
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.m << ',' << r.n << ',' << r.trial << ',' << r.seed << ','
        << r.mwd << ',' << r.wd_vec << ',' << r.qmwd << ','
        << format_opt(r.err_wd) << ',' << format_opt(r.err_qmwd) << ','
        << r.time_mwd_ns << ',' << r.time_qmwd_ns << ',' << r.time_wd_ns
        << ',' << (r.excluded ? 1 : 0) << ',' << quote_csv(r.fail_reason)
        << '\n';
  }
  out.flush();
  check_stream(out);
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started) {
          throw Error(ErrorKind::kBadToken, "csv: stray quote");
        }
        quoted = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw Error(ErrorKind::kBadToken, "csv: unterminated quote");
  if (field_started || !row.empty()) end_row();
  return rows;
}

std::vector<BenchRecord> read_records_csv(std::istream& in) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  const auto rows = parse_csv(text);
  if (rows.empty()) throw Error(ErrorKind::kBadToken, "csv: missing header");
  std::string header;
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    if (i) header += ',';
    header += rows[0][i];
  }
  if (header != kRecordCsvHeader) {
    throw Error(ErrorKind::kBadToken, "csv: unexpected header");
  }
  std::vector<BenchRecord> records;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& f = rows[k];
    if (f.size() != 14) {
      throw Error(ErrorKind::kBadToken,
                  "csv: row " + std::to_string(k) + " has " +
                      std::to_string(f.size()) + " fields");
    }
    BenchRecord r;
    r.m = parse_number<std::size_t>(f[0], "m");
    r.n = parse_number<std::size_t>(f[1], "n");
    r.trial = parse_number<std::size_t>(f[2], "trial");
    r.seed = parse_number<std::uint64_t>(f[3], "seed");
    r.mwd = parse_number<Mass>(f[4], "mwd");
    r.wd_vec = parse_number<Mass>(f[5], "wd_vec");
    r.qmwd = parse_number<Mass>(f[6], "qmwd");
    r.err_wd = parse_opt_real(f[7], "err_wd");
    r.err_qmwd = parse_opt_real(f[8], "err_qmwd");
    r.time_mwd_ns = parse_number<std::int64_t>(f[9], "time_mwd_ns");
    r.time_qmwd_ns = parse_number<std::int64_t>(f[10], "time_qmwd_ns");
    r.time_wd_ns = parse_number<std::int64_t>(f[11], "time_wd_ns");
    const int excluded = parse_number<int>(f[12], "excluded");
    if (excluded != 0 && excluded != 1) {
      throw Error(ErrorKind::kBadToken, "csv: excluded must be 0 or 1");
    }
    r.excluded = excluded == 1;
    r.fail_reason = f[13];
    records.push_back(std::move(r));
  }
  return records;
}

void write_summary_csv(std::span<const SweepSummary> rows, std::ostream& out) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& s : rows) {
    out << s.m << ',' << s.n << ',' << s.trials << ',' << s.excluded << ','
        << format_opt(s.mean_err_wd) << ',' << format_opt(s.median_err_wd)
        << ',' << format_opt(s.mean_err_qmwd) << ','
        << format_opt(s.median_err_qmwd) << ','
        << format_opt(s.mean_time_mwd_ns) << ','
        << format_real(s.mean_time_qmwd_ns) << ','
        << format_real(s.mean_time_wd_ns) << '\n';
  }
  out.flush();
  check_stream(out);
}

namespace {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;  // (m, value)
};

struct Panel {
  double x0, y0, width, height;
};

// Draws axes, ticks and one polyline per series into panel. Values are
// plotted as given; log scaling happens before the call.
void draw_panel(std::ostream& out, const Panel& pn, const std::string& title,
                const std::string& y_label, const std::vector<Series>& series,
                double x_min, double x_max, double y_min, double y_max,
                bool log_y) {
  if (x_max <= x_min) x_max = x_min + 1;
  if (y_max <= y_min) y_max = y_min + 1;
  auto sx = [&](double x) {
    return pn.x0 + (x - x_min) / (x_max - x_min) * pn.width;
  };
  auto sy = [&](double y) {
    return pn.y0 + pn.height - (y - y_min) / (y_max - y_min) * pn.height;
  };
  out << "<g>\n";
  out << "<text x=\"" << pn.x0 + pn.width / 2 << "\" y=\"" << pn.y0 - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  out << "<line x1=\"" << pn.x0 << "\" y1=\"" << pn.y0 + pn.height
      << "\" x2=\"" << pn.x0 + pn.width << "\" y2=\"" << pn.y0 + pn.height
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << pn.x0 << "\" y1=\"" << pn.y0 << "\" x2=\"" << pn.x0
      << "\" y2=\"" << pn.y0 + pn.height << "\" stroke=\"black\"/>\n";
  const int x_ticks = static_cast<int>(std::min(10.0, x_max - x_min));
  for (int t = 0; t <= x_ticks; ++t) {
    const double x = x_min + (x_max - x_min) * t / x_ticks;
    out << "<text x=\"" << sx(x) << "\" y=\"" << pn.y0 + pn.height + 16
        << "\" text-anchor=\"middle\" font-size=\"10\">"
        << static_cast<long long>(std::lround(x)) << "</text>\n";
  }
  for (int t = 0; t <= 5; ++t) {
    const double y = y_min + (y_max - y_min) * t / 5;
    std::ostringstream label;
    label.precision(3);
    if (log_y) {
      label << std::pow(10.0, y);
    } else {
      label << y;
    }
    out << "<text x=\"" << pn.x0 - 6 << "\" y=\"" << sy(y) + 3
        << "\" text-anchor=\"end\" font-size=\"10\">" << label.str()
        << "</text>\n";
  }
  out << "<text x=\"" << pn.x0 + pn.width / 2 << "\" y=\""
      << pn.y0 + pn.height + 34
      << "\" text-anchor=\"middle\" font-size=\"12\">m</text>\n";
  out << "<text x=\"" << pn.x0 - 52 << "\" y=\"" << pn.y0 + pn.height / 2
      << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 "
      << pn.x0 - 52 << ' ' << pn.y0 + pn.height / 2 << ")\">" << y_label
      << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      if (i) out << ' ';
      out << sx(s.points[i].first) << ',' << sy(s.points[i].second);
    }
    out << "\"/>\n";
    const double ly = pn.y0 + 14 + 16 * static_cast<double>(k);
    out << "<text x=\"" << pn.x0 + pn.width - 8 << "\" y=\"" << ly
        << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << s.color
        << "\">" << s.label << "</text>\n";
  }
  out << "</g>\n";
}

}  // namespace

void write_svg(std::span<const SweepSummary> rows, std::ostream& out) {
  double x_min = 0, x_max = 1;
  if (!rows.empty()) {
    x_min = static_cast<double>(rows.front().m);
    x_max = static_cast<double>(rows.back().m);
  }

  Series err_wd{"WD", "#1f77b4", {}};
  Series err_qmwd{"QMWD", "#d62728", {}};
  Series t_mwd{"MWD", "#2ca02c", {}};
  Series t_qmwd{"QMWD", "#d62728", {}};
  Series t_wd{"WD", "#1f77b4", {}};
  double err_max = 0;
  double t_lo = 0;
  double t_hi = 1;
  bool any_time = false;
  auto log_time = [](double ns) { return std::log10(std::max(ns, 1.0)); };
  auto add_time = [&](Series& s, double m, double ns) {
    const double y = log_time(ns);
    s.points.emplace_back(m, y);
    if (!any_time) {
      t_lo = t_hi = y;
      any_time = true;
    }
    t_lo = std::min(t_lo, y);
    t_hi = std::max(t_hi, y);
  };
  for (const auto& r : rows) {
    const auto m = static_cast<double>(r.m);
    if (r.mean_err_wd) {
      err_wd.points.emplace_back(m, *r.mean_err_wd);
      err_max = std::max(err_max, *r.mean_err_wd);
    }
    if (r.mean_err_qmwd) {
      err_qmwd.points.emplace_back(m, *r.mean_err_qmwd);
      err_max = std::max(err_max, *r.mean_err_qmwd);
    }
    if (r.mean_time_mwd_ns) add_time(t_mwd, m, *r.mean_time_mwd_ns);
    add_time(t_qmwd, m, r.mean_time_qmwd_ns);
    add_time(t_wd, m, r.mean_time_wd_ns);
  }
  const std::string n_label =
      rows.empty() ? std::string() : " (n=" + std::to_string(rows[0].n) + ")";

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" "
         "height=\"440\" viewBox=\"0 0 1000 440\">\n"
      << "<rect width=\"1000\" height=\"440\" fill=\"white\"/>\n";
  draw_panel(out, {80, 50, 380, 320}, "Average relative error" + n_label,
             "relative error vs MWD", {err_wd, err_qmwd}, x_min, x_max, 0,
             err_max > 0 ? err_max * 1.1 : 1, false);
  draw_panel(out, {580, 50, 380, 320}, "Average execution time" + n_label,
             "time (ns, log scale)", {t_mwd, t_qmwd, t_wd}, x_min, x_max,
             std::floor(t_lo), std::ceil(t_hi), true);
  out << "</svg>\n";
  out.flush();
  check_stream(out);
}

}  // namespace gridwd
