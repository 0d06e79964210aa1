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

#include "mebasis/linalg.hpp"

namespace mebasis {

struct HadamardReport {
    bool ok = false;
    double modulusDeviation = 0.0;   // max_{k,l} | |H[k,l]| - 1 |
    double unitarityDeviation = 0.0; // max entry of |H H^dagger - d I|
};

/// Throws std::invalid_argument for non-square input.
HadamardReport isHadamard(const ComplexMatrix &h, double tol = kDefaultTolerance);

/// Square matrix with unimodular entries and H H^dagger = d I.
/// Instances only exist in validated form.
class HadamardMatrix {
  public:
    /// Validates and wraps; throws std::invalid_argument naming the violated
    /// property.
    static HadamardMatrix fromMatrix(ComplexMatrix h, double tol = kDefaultTolerance);

    int order() const { return static_cast<int>(matrix_.rows()); }
    const ComplexMatrix &matrix() const { return matrix_; }
    Complex operator()(int k, int l) const { return matrix_(k, l); }

  private:
    explicit HadamardMatrix(ComplexMatrix h) : matrix_(std::move(h)) {}
    ComplexMatrix matrix_;
};

/// Character table of the cyclic group: H[k,l] = exp(2 pi i k l / d).
HadamardMatrix fourierHadamard(int d);

/// Kronecker product, revalidated. Throws NumericalError if validation fails.
HadamardMatrix tensorHadamard(const HadamardMatrix &h1, const HadamardMatrix &h2);

/// Real Sylvester matrix of order 2^k, the k-th tensor power of F_2.
HadamardMatrix sylvesterHadamard(int k);

} // namespace mebasis
