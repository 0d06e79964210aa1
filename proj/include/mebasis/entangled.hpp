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

#include <span>
#include <utility>
#include <vector>

#include "mebasis/hadamard.hpp"
#include "mebasis/latin.hpp"
#include "mebasis/linalg.hpp"

namespace mebasis {

/// Canonical maximally entangled vector (1/sqrt d) sum_a e_a (x) e_a.
/// Every transpose and conjugate in this library is taken relative to the
/// computational basis singled out here.
StateVector omega(int d);

/// (X (x) 1) omega(d); amplitude [i*d + j] equals X[i,j] / sqrt(d).
StateVector vectorFromOperator(const ComplexMatrix &x, int d);
StateVector vectorFromOperator(const ComplexMatrix &x);

/// Inverse of vectorFromOperator. Throws for non-square factor dimensions.
ComplexMatrix operatorFromVector(const StateVector &v);

enum class Side { Left, Right };

/// Partial trace over the complementary factor. Throws std::invalid_argument
/// when the norm of v deviates from 1 by more than tol.
ComplexMatrix reducedDensity(const StateVector &v, Side side, double tol = kDefaultTolerance);

struct MaxEntangledReport {
    bool ok = false;
    double residual = 0.0; // ||X^dagger X - 1||_F
    RealVector schmidtCoefficients;
};

MaxEntangledReport isMaxEntangled(const StateVector &v, double tol = kDefaultTolerance);

/// d^2 unitaries X_a with (1/d) tr(X_a^dagger X_b) = delta_ab. Element
/// a = i*d + j of a shift-and-multiply basis is U^{ij}.
struct UnitaryBasis {
    int dim = 0;
    std::vector<ComplexMatrix> ops;
};

/// Orthonormal basis of maximally entangled vectors of C^d (x) C^d.
struct EntangledBasis {
    int dim = 0;
    std::vector<StateVector> vectors;
};

EntangledBasis toEntangledBasis(const UnitaryBasis &basis);
UnitaryBasis toUnitaryBasis(const EntangledBasis &basis);

struct BasisReport {
    bool ok = false;
    double maxUnitarity = 0.0;       // max_a ||X_a^dagger X_a - 1||_F
    double maxOrthonormality = 0.0;  // max_{a,b} |(1/d) tr(X_a^dagger X_b) - delta_ab|
    int worstUnitary = -1;
    std::pair<int, int> worstPair{-1, -1}; // a <= b
};

/// Throws std::invalid_argument when the count is not dim^2 or an operator
/// has the wrong shape.
BasisReport verifyUnitaryBasis(const UnitaryBasis &basis, double tol = kDefaultTolerance);

struct EntangledBasisReport {
    bool ok = false;
    double maxGramDeviation = 0.0;    // max |<Psi_a, Psi_b> - delta_ab|
    double maxEntanglementResidual = 0.0;
};

EntangledBasisReport verifyEntangledBasis(const EntangledBasis &basis, double tol = kDefaultTolerance);

/// Thrown when a constructed basis fails its own verification.
class BasisVerificationError : public NumericalError {
  public:
    BasisVerificationError(const std::string &what, std::pair<int, int> pair)
        : NumericalError(what), pair_(pair) {}
    std::pair<int, int> offendingPair() const { return pair_; }

  private:
    std::pair<int, int> pair_;
};

/// U^{ij} e_k = H^j[i,k] e_{tau(k,j)}. Throws std::invalid_argument on order
/// mismatch and BasisVerificationError if the result fails verification.
UnitaryBasis shiftMultiplyBasis(std::span<const HadamardMatrix> hadamards, const LatinSquare &tau);

/// All-Fourier Hadamards with the cyclic Latin square.
UnitaryBasis fourierBasis(int d);

} // namespace mebasis
