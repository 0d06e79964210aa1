// Copyright 2026 The mebasis Authors
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
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mebasis {

using IntTable = std::vector<std::vector<int>>;

struct LatinReport {
    enum class Line { None, Row, Column };

    bool ok = true;
    Line line = Line::None; // first violating line, rows scanned before columns
    int index = -1;
    int repeatedSymbol = -1;

    std::string describe() const;
};

/// Row/column permutation scan. Throws std::invalid_argument when the table
/// is not square or holds an entry outside [0, d).
LatinReport validateLatinSquare(const IntTable &table);

/// A d x d table where every symbol of [0, d) occurs once per row and once
/// per column, i.e. a composition satisfying both cancellation laws.
class LatinSquare {
  public:
    /// Throws std::invalid_argument if the table is not a Latin square.
    static LatinSquare fromTable(const IntTable &table);

    int order() const { return order_; }
    int operator()(int row, int col) const { return cells_[row * order_ + col]; }
    IntTable table() const;

  private:
    LatinSquare(int order, std::vector<int> cells) : order_(order), cells_(std::move(cells)) {}
    int order_;
    std::vector<int> cells_;
};

/// Addition table of Z_d: table[k][j] = (k + j) mod d.
LatinSquare cyclicLatinSquare(int d);

} // namespace mebasis
