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
#include "mebasis/hadamard.hpp"

#include <cmath>
#include <numbers>

namespace mebasis {

HadamardReport isHadamard(const ComplexMatrix &h, double tol) {
    if (h.rows() != h.cols())
        throw std::invalid_argument("isHadamard: matrix is not square");
    const auto d = h.rows();
    HadamardReport report;
    if (d == 0)
        return report;
    report.modulusDeviation = (h.cwiseAbs().array() - 1.0).abs().maxCoeff();
    const ComplexMatrix gram = h * h.adjoint() - static_cast<double>(d) * ComplexMatrix::Identity(d, d);
    report.unitarityDeviation = maxAbs(gram);
    report.ok = report.modulusDeviation < tol && report.unitarityDeviation < tol;
    return report;
}

HadamardMatrix HadamardMatrix::fromMatrix(ComplexMatrix h, double tol) {
    if (h.rows() == 0)
        throw std::invalid_argument("Hadamard matrix must have positive order");
    const HadamardReport r = isHadamard(h, tol);
    if (r.modulusDeviation >= tol)
        throw std::invalid_argument("Hadamard matrix entries must have modulus 1 (deviation " +
                                    std::to_string(r.modulusDeviation) + ")");
    if (r.unitarityDeviation >= tol)
        throw std::invalid_argument("Hadamard matrix must satisfy H H^dagger = d I (deviation " +
                                    std::to_string(r.unitarityDeviation) + ")");
    return HadamardMatrix(std::move(h));
}

HadamardMatrix fourierHadamard(int d) {
    if (d < 1)
        throw std::invalid_argument("fourierHadamard: order must be positive");
    ComplexMatrix h(d, d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            // Reduce k*l mod d first so the phase argument stays small.
            const int e = (k * l) % d;
            if ((4 * e) % d == 0) {
                // Quarter turns are exact; keeps F_2 and its powers real.
                static const Complex quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
                h(k, l) = quarter[4 * e / d];
            } else {
                h(k, l) = std::polar(1.0, 2.0 * std::numbers::pi * e / d);
            }
        }
    return HadamardMatrix::fromMatrix(std::move(h), 1e-12);
}

HadamardMatrix tensorHadamard(const HadamardMatrix &h1, const HadamardMatrix &h2) {
    ComplexMatrix t = tensor(h1.matrix(), h2.matrix());
    if (!isHadamard(t).ok)
        throw NumericalError("tensorHadamard: product failed Hadamard validation");
    return HadamardMatrix::fromMatrix(std::move(t));
}

HadamardMatrix sylvesterHadamard(int k) {
    if (k < 0)
        throw std::invalid_argument("sylvesterHadamard: exponent must be nonnegative");
    HadamardMatrix h = HadamardMatrix::fromMatrix(ComplexMatrix::Ones(1, 1));
    const HadamardMatrix f2 = fourierHadamard(2);
    for (int i = 0; i < k; ++i)
        h = tensorHadamard(h, f2);
    return h;
}

} // namespace mebasis
