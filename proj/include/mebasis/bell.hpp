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

#include <array>

#include "mebasis/antilinear.hpp"
#include "mebasis/entangled.hpp"

namespace mebasis {

/// sigma_0 = 1, sigma_1 = X, sigma_2 = ((0,-i),(i,0)), sigma_3 = Z.
ComplexMatrix pauli(int k);

/// {1, i sigma_1, i sigma_2, i sigma_3}.
UnitaryBasis bellUnitaries();

/// Phi_0 = Omega, Phi_k = (i sigma_k (x) 1) Omega.
EntangledBasis bellBasis();

/// Columns are the Bell vectors, so P^dagger U P is U in Bell coordinates.
ComplexMatrix bellFrame();
ComplexMatrix toBellCoordinates(const ComplexMatrix &u);
ComplexMatrix fromBellCoordinates(const ComplexMatrix &b);

/// Complex conjugation of the Bell-basis coefficients. Throws unless v is
/// in C^2 (x) C^2.
StateVector bellConjugate(const StateVector &v);

/// b ~ phase * a, with phase the unimodular least-squares fit.
struct PhaseAlignment {
    Complex phase{1.0, 0.0};
    double residual = 0.0; // ||b - phase * a||_F
};

PhaseAlignment alignPhase(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugation in Bell basis as an antilinear operator (matrix P P^T).
AntilinearOp bellConjugation();

/// Global phase relating conjugation in Bell basis to Theta (x) Theta.
PhaseAlignment bellConjugationPhase();

/// Psi_a = phases[a] (U1 (x) U2) Phi_{permutation[a]}.
struct BellCanonicalForm {
    ComplexMatrix u1;
    ComplexMatrix u2;
    std::array<Complex, 4> phases{};
    std::array<int, 4> permutation{0, 1, 2, 3};
    bool oddPermutation = false;
    double residual = 0.0; // max_a ||Psi_a - reconstruction_a||
};

/// Brings a maximally entangled basis of C^2 (x) C^2 to standard Bell form.
/// Throws std::invalid_argument if psi is not an orthonormal basis of
/// maximally entangled vectors, or if the reconstruction misses tol.
BellCanonicalForm canonicalizeBellBasis(const EntangledBasis &psi, double tol = 1e-8);

} // namespace mebasis
