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
#include "mebasis/latin.hpp"

#include <algorithm>
#include <stdexcept>

namespace mebasis {

std::string LatinReport::describe() const {
    if (ok)
        return "Latin square";
    const char *what = line == Line::Row ? "row " : "column ";
    return std::string(what) + std::to_string(index) + " repeats symbol " + std::to_string(repeatedSymbol);
}

LatinReport validateLatinSquare(const IntTable &table) {
    const int d = static_cast<int>(table.size());
    if (d == 0)
        throw std::invalid_argument("Latin square must have positive order");
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(table[r].size()) != d)
            throw std::invalid_argument("Latin square table is not square (row " + std::to_string(r) + ")");
        for (int c = 0; c < d; ++c)
            if (table[r][c] < 0 || table[r][c] >= d)
                throw std::invalid_argument("Latin square entry out of range at (" + std::to_string(r) + "," +
                                            std::to_string(c) + ")");
    }

    std::vector<char> seen(d);
    for (int r = 0; r < d; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int c = 0; c < d; ++c) {
            const int s = table[r][c];
            if (seen[s])
                return LatinReport{false, LatinReport::Line::Row, r, s};
            seen[s] = 1;
        }
    }
    for (int c = 0; c < d; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int r = 0; r < d; ++r) {
            const int s = table[r][c];
            if (seen[s])
                return LatinReport{false, LatinReport::Line::Column, c, s};
            seen[s] = 1;
        }
    }
    return LatinReport{};
}

LatinSquare LatinSquare::fromTable(const IntTable &table) {
    const LatinReport report = validateLatinSquare(table);
    if (!report.ok)
        throw std::invalid_argument("not a Latin square: " + report.describe());
    const int d = static_cast<int>(table.size());
    std::vector<int> cells;
    cells.reserve(d * d);
    for (const auto &row : table)
        cells.insert(cells.end(), row.begin(), row.end());
    return LatinSquare(d, std::move(cells));
}

IntTable LatinSquare::table() const {
    IntTable t(order_, std::vector<int>(order_));
    for (int r = 0; r < order_; ++r)
        for (int c = 0; c < order_; ++c)
            t[r][c] = (*this)(r, c);
    return t;
}

LatinSquare cyclicLatinSquare(int d) {
    if (d < 1)
        throw std::invalid_argument("cyclicLatinSquare: order must be positive");
    IntTable t(d, std::vector<int>(d));
    for (int k = 0; k < d; ++k)
        for (int j = 0; j < d; ++j)
            t[k][j] = (k + j) % d;
    return LatinSquare::fromTable(t);
}

} // namespace mebasis
