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

#include "mebasis/check_report.hpp"
#include "mebasis/entangled.hpp"

namespace mebasis {

/// Numerical probes of the equivalent characterisations of the Bell basis.
/// Conditions 2 through 5 are sampled; condition 6 is exact over all pairs.
///
///  2: max |Im <Psi_a, (U1 (x) U2) Psi_b>| for Haar U1, U2 in SU(d).
///  3: fraction of non-factorisable unitaries among those real orthogonal
///     with det 1 in Psi-coordinates.
///  4: max |Im(c_a conj(c_b))|, c_a = <Psi_a, phi>, phi = (V (x) 1) Omega.
///  5: unitarity residual of sum_a a_a X_a for real unit vectors a.
///  6: max ||X_a^dagger X_b + X_b^dagger X_a - 2 delta_ab 1||_F.
///
/// Throws std::invalid_argument for any other condition id.
CheckReport checkTheorem5(const EntangledBasis &basis, int condition, int trials, std::uint64_t seed,
                          double tol = kDefaultTolerance);

} // namespace mebasis
