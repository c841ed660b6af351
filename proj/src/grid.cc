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

#include "gridwd/grid.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>

#include "gridwd/error.h"

namespace gridwd {
namespace {

void require_nonnegative(std::span<const Mass> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) {
      throw Error(ErrorKind::kNegativeEntry,
                  "negative mass at index " + std::to_string(i));
    }
  }
}

Mass checked_sum(std::span<const Mass> values) {
  Mass total = 0;
  for (Mass v : values) {
    if (v > std::numeric_limits<Mass>::max() - total) {
      throw Error(ErrorKind::kOverflow, "total mass overflows 64 bits");
    }
    total += v;
  }
  return total;
}

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Splits a line into tokens. Separators are runs of whitespace containing at
// most one comma; "1,,2" and a leading or trailing comma leave an empty token.
std::vector<std::string_view> tokenize(std::string_view line,
                                       std::size_t line_no) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  const std::size_t len = line.size();
  auto skip_blank = [&] {
    while (i < len && is_separator(line[i]) && line[i] != ',') ++i;
  };
  skip_blank();
  if (i < len && line[i] == ',') {
    throw Error(ErrorKind::kBadToken,
                "line " + std::to_string(line_no) + ": leading comma");
  }
  while (i < len) {
    const std::size_t start = i;
    while (i < len && !is_separator(line[i])) ++i;
    tokens.push_back(line.substr(start, i - start));
    skip_blank();
    if (i < len && line[i] == ',') {
      ++i;
      skip_blank();
      if (i >= len || line[i] == ',') {
        throw Error(ErrorKind::kBadToken,
                    "line " + std::to_string(line_no) + ": empty token");
      }
    }
  }
  return tokens;
}

Mass parse_token(std::string_view tok, std::size_t line_no) {
  Mass value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw Error(ErrorKind::kBadToken, "line " + std::to_string(line_no) +
                                          ": bad token '" + std::string(tok) +
                                          "'");
  }
  return value;
}

}  // namespace

MassVector::MassVector(std::vector<Mass> values) : values_(std::move(values)) {
  require_nonnegative(values_);
}

Mass MassVector::total() const { return checked_sum(values_); }

GridHistogram::GridHistogram(std::size_t rows, std::size_t cols,
                             std::vector<Mass> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) {
    throw Error(ErrorKind::kInvalidArgument, "grid dimensions must be >= 1");
  }
  if (cells_.size() / cols_ != rows_ || cells_.size() % cols_ != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "cell count does not match rows * cols");
  }
  require_nonnegative(cells_);
}

GridHistogram GridHistogram::Zeros(std::size_t rows, std::size_t cols) {
  return GridHistogram(rows, cols, std::vector<Mass>(rows * cols, 0));
}

GridHistogram parse_grid(std::istream& in) {
  std::vector<Mass> cells;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (std::all_of(line.begin(), line.end(), [](char c) {
          return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
        })) {
      continue;
    }
    const auto tokens = tokenize(line, line_no);
    if (rows == 0) {
      cols = tokens.size();
    } else if (tokens.size() != cols) {
      throw Error(ErrorKind::kRaggedRows,
                  "line " + std::to_string(line_no) + " has " +
                      std::to_string(tokens.size()) + " values, expected " +
                      std::to_string(cols));
    }
    for (auto tok : tokens) cells.push_back(parse_token(tok, line_no));
    ++rows;
  }
  if (rows == 0) throw Error(ErrorKind::kEmpty, "grid text has no rows");
  return GridHistogram(rows, cols, std::move(cells));
}

GridHistogram parse_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_grid(in);
}

MassVector vec_row_major(const GridHistogram& g) {
  return MassVector(std::vector<Mass>(g.cells().begin(), g.cells().end()));
}

GridHistogram rotate90(const GridHistogram& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  std::vector<Mass> out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[(n - 1 - j) * m + i] = g.at(i, j);
    }
  }
  return GridHistogram(n, m, std::move(out));
}

GridHistogram rotate90_clockwise(const GridHistogram& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  std::vector<Mass> out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[j * m + (m - 1 - i)] = g.at(i, j);
    }
  }
  return GridHistogram(n, m, std::move(out));
}

GridHistogram transpose(const GridHistogram& g) {
  const std::size_t m = g.rows();
  const std::size_t n = g.cols();
  std::vector<Mass> out(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[j * m + i] = g.at(i, j);
    }
  }
  return GridHistogram(n, m, std::move(out));
}

Mass total_mass(const GridHistogram& g) { return checked_sum(g.cells()); }

Mass total_mass(const MassVector& v) { return v.total(); }

void check_cost_bound(Mass total, std::size_t steps) {
  const auto limit = static_cast<unsigned __int128>(
      std::numeric_limits<Mass>::max());
  if (static_cast<unsigned __int128>(total) * steps > limit) {
    throw Error(ErrorKind::kOverflow,
                "total mass times maximum travel distance overflows 64 bits");
  }
}

}  // namespace gridwd
