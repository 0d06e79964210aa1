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

#include "mebasis/factorization.hpp"

namespace mebasis {

enum class DetVerdict { Local, LocalFlip, NotRealInBell };

const char *toString(DetVerdict verdict);

struct DetCriterionResult {
    DetVerdict verdict = DetVerdict::NotRealInBell;
    Complex determinant;
    double maxImaginary = 0.0; // largest |Im| of U in Bell coordinates
    FactorizationResult factorization;
    /// Whether the determinant verdict matches factorLocal. A unitary that is
    /// not real in Bell coordinates makes no prediction and is consistent.
    bool consistent = true;
};

/// For U on C^2 (x) C^2 real in Bell coordinates, det U = +1 means local
/// and det U = -1 means local times flip. Throws std::invalid_argument for
/// non-unitary or wrongly sized input.
DetCriterionResult detCriterion(const ComplexMatrix &u, double tol = kDefaultTolerance);

} // namespace mebasis
