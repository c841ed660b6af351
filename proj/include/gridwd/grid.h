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

#ifndef GRIDWD_GRID_H_
#define GRIDWD_GRID_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string_view>
#include <vector>

namespace gridwd {

// Mass and distance values. Cells are nonnegative; 64 bits leave room for
// total_mass * (rows + cols) on any grid the library accepts.
using Mass = std::int64_t;

struct CellIndex {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

// A 1D sequence of nonnegative masses.
class MassVector {
 public:
  MassVector() = default;
  // Throws kNegativeEntry if any value is negative.
  explicit MassVector(std::vector<Mass> values);

  std::span<const Mass> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  Mass operator[](std::size_t i) const { return values_[i]; }
  Mass total() const;

  friend bool operator==(const MassVector&, const MassVector&) = default;

 private:
  std::vector<Mass> values_;
};

// An immutable rows x cols grid of nonnegative integer masses, row-major.
class GridHistogram {
 public:
  // Throws kInvalidArgument for zero dimensions or a cell count that does not
  // match rows * cols, and kNegativeEntry for a negative cell.
  GridHistogram(std::size_t rows, std::size_t cols, std::vector<Mass> cells);

  static GridHistogram Zeros(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return cells_.size(); }

  Mass at(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col];
  }
  Mass at(CellIndex c) const { return at(c.row, c.col); }
  std::span<const Mass> cells() const { return cells_; }

  friend bool operator==(const GridHistogram&,
                         const GridHistogram&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Mass> cells_;
};

// Reads one grid row per non-blank line; tokens are separated by whitespace
// or commas.
GridHistogram parse_grid(std::istream& in);
GridHistogram parse_grid(std::string_view text);

MassVector vec_row_major(const GridHistogram& g);

// Counterclockwise quarter turn: output cell (cols - 1 - j, i) holds input
// cell (i, j). The result is cols x rows.
GridHistogram rotate90(const GridHistogram& g);

// Clockwise quarter turn: output cell (j, rows - 1 - i) holds input (i, j).
GridHistogram rotate90_clockwise(const GridHistogram& g);

GridHistogram transpose(const GridHistogram& g);

Mass total_mass(const GridHistogram& g);
Mass total_mass(const MassVector& v);

// Throws kOverflow when total * steps cannot be represented as Mass, where
// steps bounds the ground distance any unit may travel.
void check_cost_bound(Mass total, std::size_t steps);

}  // namespace gridwd

#endif  // GRIDWD_GRID_H_
