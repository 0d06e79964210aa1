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
#include <vector>

#include "mebasis/check_report.hpp"

namespace mebasis {

struct CliffordReport {
    CheckReport relations;      // hermiticity and R_a R_b + R_b R_a = 2 delta_ab 1
    int generators = 0;
    int dimension = 0;
    std::optional<int> predictedDimension; // 2^{(N-1)/2}, odd N only
    bool dimensionMatches = true;

    bool passed() const { return relations.passed() && dimensionMatches; }
};

/// Throws std::invalid_argument when the matrices are not square of a
/// common dimension.
CliffordReport cliffordCheck(const std::vector<ComplexMatrix> &rs, double tol = kDefaultTolerance);

/// N hermitian unitaries on C^{2^{(N-1)/2}} satisfying the Clifford
/// relations, built by doubling: from generators R' on the smaller space,
/// R_1 = sigma_3 (x) 1, R_2 = sigma_1 (x) 1, R_{a+2} = sigma_2 (x) R'_a.
/// Throws std::invalid_argument for even or nonpositive N.
std::vector<ComplexMatrix> buildCliffordGenerators(int n);

} // namespace mebasis
