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
#include "mebasis/det_criterion.hpp"

#include <cmath>
#include <string>

#include "mebasis/bell.hpp"

namespace mebasis {

const char *toString(DetVerdict verdict) {
    switch (verdict) {
    case DetVerdict::Local:
        return "local";
    case DetVerdict::LocalFlip:
        return "localFlip";
    case DetVerdict::NotRealInBell:
        break;
    }
    return "notRealInBell";
}

DetCriterionResult detCriterion(const ComplexMatrix &u, double tol) {
    if (u.rows() != 4 || u.cols() != 4)
        throw std::invalid_argument("detCriterion: operator must act on C^2 (x) C^2");
    const double unitarity = unitarityResidual(u);
    if (!(unitarity < std::max(tol, kDefaultTolerance)))
        throw std::invalid_argument("detCriterion: input is not unitary (residual " + std::to_string(unitarity) + ")");

    DetCriterionResult out;
    const ComplexMatrix b = toBellCoordinates(u);
    out.maxImaginary = b.imag().cwiseAbs().maxCoeff();
    out.determinant = u.determinant();
    out.factorization = factorLocal(u);

    if (out.maxImaginary > tol) {
        out.verdict = DetVerdict::NotRealInBell;
        out.consistent = true;
        return out;
    }
    // A real orthogonal matrix has det = +/-1.
    out.verdict = out.determinant.real() > 0.0 ? DetVerdict::Local : DetVerdict::LocalFlip;
    const FactorKind expected = out.verdict == DetVerdict::Local ? FactorKind::Local : FactorKind::LocalFlip;
    out.consistent = out.factorization.kind == expected;
    return out;
}

} // namespace mebasis
