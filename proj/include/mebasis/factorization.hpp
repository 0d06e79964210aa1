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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mebasis/check_report.hpp"
#include "mebasis/linalg.hpp"

namespace mebasis {

/// Rank-one threshold on s_2 / s_1 of the operator-Schmidt spectrum.
inline constexpr double kFactorTolerance = 1e-8;

/// U = sum_i s_i A_i (x) B_i, with {A_i} and {B_i} orthonormal in the
/// Hilbert-Schmidt inner product tr(A^dagger B). Under this normalisation a
/// product of unitaries U1 (x) U2 on C^d (x) C^d has the single coefficient d.
struct OperatorSchmidt {
    RealVector coefficients; // nonincreasing, d^2 of them
    std::vector<ComplexMatrix> left;
    std::vector<ComplexMatrix> right;
};

/// R(U)[(i,j),(k,l)] = U[(i,k),(j,l)].
ComplexMatrix reshuffle(const ComplexMatrix &u, int d);

/// Factor dimension d of an operator on C^d (x) C^d; throws unless the
/// matrix is square of size d^2.
int factorDimension(const ComplexMatrix &u);

OperatorSchmidt operatorSchmidt(const ComplexMatrix &u);

/// F (phi (x) psi) = psi (x) phi on C^d (x) C^d.
ComplexMatrix flipOperator(int d);

enum class FactorKind { Local, LocalFlip, Neither };

const char *toString(FactorKind kind);

struct FactorizationResult {
    FactorKind kind = FactorKind::Neither;
    /// U1, U2 with U = U1 (x) U2 (Local) or U = (U1 (x) U2) F (LocalFlip).
    /// The first entry of U1 with modulus above the tolerance is real positive.
    std::optional<std::pair<ComplexMatrix, ComplexMatrix>> factors;
    /// Frobenius distance between U and the reconstruction. For Neither, the
    /// smaller of the two rank-one reconstruction distances.
    double residual = 0.0;
    RealVector schmidtCoefficients; // of U itself
};

/// Decides local / local-times-flip / neither. Throws std::invalid_argument
/// for non-unitary input.
FactorizationResult factorLocal(const ComplexMatrix &u, double tol = kFactorTolerance);

/// Applies U to maximally entangled (V (x) 1) Omega for Haar V and records
/// the unitarity residual of the resulting operator.
CheckReport checkPreservesMaxEntangled(const ComplexMatrix &u, int trials, std::uint64_t seed,
                                       double tol = kDefaultTolerance);

} // namespace mebasis
